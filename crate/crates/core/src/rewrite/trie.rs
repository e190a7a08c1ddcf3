use std::collections::BTreeMap;

/// Trie over letter sequences; each terminal records the ids stored there.
#[derive(Clone, Debug, Default)]
pub(crate) struct Trie {
    nodes: Vec<Node>,
}

#[derive(Clone, Debug, Default)]
struct Node {
    children: BTreeMap<u32, usize>,
    ids: Vec<usize>,
}

impl Trie {
    pub fn new() -> Self {
        Trie {
            nodes: vec![Node::default()],
        }
    }

    pub fn insert(&mut self, key: impl IntoIterator<Item = u32>, id: usize) {
        let mut at = 0;
        for l in key {
            at = match self.nodes[at].children.get(&l) {
                Some(&next) => next,
                None => {
                    self.nodes.push(Node::default());
                    let next = self.nodes.len() - 1;
                    self.nodes[at].children.insert(l, next);
                    next
                }
            };
        }
        self.nodes[at].ids.push(id);
    }

    /// Calls `hit(len, ids)` for every stored key that is a prefix of `text`.
    pub fn prefixes_of(
        &self,
        text: impl IntoIterator<Item = u32>,
        mut hit: impl FnMut(usize, &[usize]),
    ) {
        let mut at = 0;
        let mut len = 0;
        if !self.nodes[0].ids.is_empty() {
            hit(0, &self.nodes[0].ids);
        }
        for l in text {
            match self.nodes[at].children.get(&l) {
                Some(&next) => at = next,
                None => return,
            }
            len += 1;
            if !self.nodes[at].ids.is_empty() {
                hit(len, &self.nodes[at].ids);
            }
        }
    }

    pub fn has_prefix_of(&self, text: impl IntoIterator<Item = u32>) -> bool {
        let mut found = false;
        self.prefixes_of(text, |_, _| found = true);
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_all_prefix_keys() {
        let mut t = Trie::new();
        t.insert([1, 0], 0);
        t.insert([1], 1);
        t.insert([1, 0, 0], 2);
        let mut seen = Vec::new();
        t.prefixes_of([1, 0, 1], |len, ids| seen.push((len, ids.to_vec())));
        assert_eq!(seen, vec![(1, vec![1]), (2, vec![0])]);
        assert!(!t.has_prefix_of([0, 1]));
    }
}

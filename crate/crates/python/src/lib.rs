//! Python bindings. Elements cross the boundary as strings in the
//! presentation-file expression syntax.

use gsb_core::anticomm::{hall_words as core_hall_words, ls_words as core_ls_words};
use gsb_core::catalog;
use gsb_core::format::{self, parse_polynomial, Kind, PresentationFile, Relations};
use gsb_core::gsb::{cd_lemma_check, is_gsb, shirshov_complete};
use gsb_core::rewrite::{irr_by_length, irr_counts, normal_form};
use gsb_core::{poly, Alphabet, Error, Polynomial, Word};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A finite set of relations in a free associative algebra.
#[pyclass(
    name = "RewriteSystem",
    module = "gsbasis",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyRewriteSystem {
    inner: gsb_core::RewriteSystem,
}

impl PyRewriteSystem {
    fn show(&self, p: &Polynomial) -> String {
        poly::display(p, self.inner.alphabet()).to_string()
    }

    fn show_word(&self, w: &Word) -> String {
        self.show(&Polynomial::monomial(w.clone()))
    }
}

#[pymethods]
impl PyRewriteSystem {
    /// Generators are listed smallest first.
    #[new]
    fn new(gens: Vec<String>, relations: Vec<String>) -> PyResult<Self> {
        let alphabet = Alphabet::new(gens).map_err(py_err)?;
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(r, &alphabet))
            .filter(|p| !matches!(p, Ok(q) if q.is_zero()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(py_err)?;
        let inner = gsb_core::RewriteSystem::new(alphabet, rels).map_err(py_err)?;
        Ok(PyRewriteSystem { inner })
    }

    #[getter]
    fn gens(&self) -> Vec<String> {
        self.inner.alphabet().names().to_vec()
    }

    /// Monic relations in canonical form.
    #[getter]
    fn relations(&self) -> Vec<String> {
        self.inner.elements().iter().map(|p| self.show(p)).collect()
    }

    fn normal_form(&self, expr: &str) -> PyResult<String> {
        let p = parse_polynomial(expr, self.inner.alphabet()).map_err(py_err)?;
        Ok(self.show(&normal_form(&p, &self.inner)))
    }

    fn is_gsb(&self) -> bool {
        is_gsb(&self.inner).holds
    }

    /// `(ambient word, reduced result)` for every nontrivial composition.
    fn failing_compositions(&self) -> Vec<(String, String)> {
        is_gsb(&self.inner)
            .failing
            .iter()
            .map(|c| {
                (
                    self.show_word(&c.w),
                    self.show(&normal_form(&c.result, &self.inner)),
                )
            })
            .collect()
    }

    /// Irreducible words of each length `0..=max_len`.
    fn irr_counts(&self, max_len: usize) -> Vec<usize> {
        irr_counts(&self.inner, max_len)
    }

    fn irr_words(&self, max_len: usize) -> Vec<String> {
        irr_by_length(&self.inner, max_len)
            .iter()
            .flatten()
            .map(|w| {
                if w.is_empty() {
                    "1".into()
                } else {
                    self.show_word(w)
                }
            })
            .collect()
    }

    /// Returns `(status, basis)`.
    fn complete(&self, max_deg: usize, max_elems: usize) -> PyResult<(String, PyRewriteSystem)> {
        if max_deg == 0 || max_elems == 0 {
            return Err(PyValueError::new_err("limits must be positive"));
        }
        let rep = shirshov_complete(&self.inner, max_deg, max_elems);
        Ok((
            rep.status.as_str().to_string(),
            PyRewriteSystem { inner: rep.basis },
        ))
    }

    /// The three bounded conditions as `(compositions, leads, counts)` flags.
    fn cd_check(&self, max_deg: usize) -> (bool, bool, bool) {
        let rep = cd_lemma_check(&self.inner, max_deg);
        (
            rep.compositions_trivial,
            rep.leads_reducible,
            rep.irr_matches,
        )
    }

    /// The system as a presentation file.
    fn to_text(&self) -> String {
        format::print(&PresentationFile {
            kind: Kind::Assoc,
            gens: self.inner.alphabet().clone(),
            mgens: None,
            brackets: Vec::new(),
            relations: Relations::Assoc(self.inner.elements().to_vec()),
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "RewriteSystem(gens={:?}, relations={:?})",
            self.gens(),
            self.relations()
        )
    }
}

#[pyfunction]
fn chinese_gsb(rank: usize) -> PyResult<PyRewriteSystem> {
    if rank == 0 {
        return Err(PyValueError::new_err("rank must be positive"));
    }
    Ok(PyRewriteSystem {
        inner: catalog::chinese_gsb(rank),
    })
}

#[pyfunction]
fn tensor_relations(nx: usize, ny: usize) -> PyResult<PyRewriteSystem> {
    if nx == 0 || ny == 0 {
        return Err(PyValueError::new_err("nx and ny must be positive"));
    }
    Ok(PyRewriteSystem {
        inner: catalog::tensor_relations(nx, ny),
    })
}

/// Hall words of degree up to `max_deg` over `x1 < … < x{letters}`.
#[pyfunction]
fn hall_words(letters: usize, max_deg: usize) -> Vec<String> {
    let alphabet = Alphabet::indexed("x", letters);
    core_hall_words(letters, max_deg)
        .iter()
        .map(|t| t.display(&alphabet))
        .collect()
}

/// Lyndon-Shirshov words of length `n` over `x1 < … < x{letters}`.
#[pyfunction]
fn ls_words(letters: usize, n: usize) -> Vec<String> {
    let alphabet = Alphabet::indexed("x", letters);
    core_ls_words(letters, n)
        .iter()
        .map(|w| poly::display(&Polynomial::monomial(w.clone()), &alphabet).to_string())
        .collect()
}

/// Parses a presentation file of any kind and returns `(kind, canonical text)`.
#[pyfunction]
fn parse(text: &str) -> PyResult<(String, String)> {
    let p = format::parse(text).map_err(py_err)?;
    Ok((p.kind.as_str().to_string(), format::print(&p)))
}

/// Parses an assoc presentation file into a rewrite system.
#[pyfunction]
fn load(text: &str) -> PyResult<PyRewriteSystem> {
    let p = format::parse(text).map_err(py_err)?;
    Ok(PyRewriteSystem {
        inner: p.rewrite_system().map_err(py_err)?,
    })
}

#[pymodule]
fn gsbasis(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRewriteSystem>()?;
    m.add_function(wrap_pyfunction!(chinese_gsb, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_relations, m)?)?;
    m.add_function(wrap_pyfunction!(hall_words, m)?)?;
    m.add_function(wrap_pyfunction!(ls_words, m)?)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(load, m)?)?;
    Ok(())
}

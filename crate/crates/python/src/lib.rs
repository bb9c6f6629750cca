//! Python bindings for permlab.

use std::collections::BTreeMap;

use permlab::arith;
use permlab::census;
use permlab::relations;
use permlab::sequences;
use permlab::tableau;
use permlab::{BivincularPattern, Budget, Error, Relation, YoungTableau};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(permlab_py, BudgetExceeded, PyRuntimeError, "n is above the enumeration budget.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        Error::Assertion(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn relation(name: &str) -> PyResult<Relation> {
    name.parse().map_err(to_py)
}

#[pyclass(name = "Permutation", module = "permlab_py", frozen, from_py_object, eq, ord, hash)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPermutation(permlab::Permutation);

#[pymethods]
impl PyPermutation {
    /// Accepts one-line notation as a string ("2413") or a list of letters.
    #[new]
    fn new(word: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = word.extract::<String>() {
            return s.parse().map(PyPermutation).map_err(to_py);
        }
        let letters: Vec<u32> = word.extract()?;
        permlab::Permutation::new(letters).map(PyPermutation).map_err(to_py)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyPermutation(permlab::Permutation::identity(n))
    }

    fn to_list(&self) -> Vec<u32> {
        self.0.as_slice().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    fn reverse(&self) -> Self {
        PyPermutation(self.0.reverse())
    }

    fn complement(&self) -> Self {
        PyPermutation(self.0.complement())
    }

    /// `self ∘ other`.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyPermutation).map_err(to_py)
    }

    fn oplus(&self, m: usize) -> Self {
        PyPermutation(self.0.oplus(m))
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn cycle_type(&self) -> Vec<u32> {
        self.0.cycle_type().parts().to_vec()
    }

    fn cycles(&self) -> Vec<Vec<u32>> {
        self.0.cycles()
    }

    fn descent_set(&self) -> Vec<usize> {
        self.0.descent_set()
    }
}

#[pyclass(name = "Pattern", module = "permlab_py", frozen, from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPattern(BivincularPattern);

#[pymethods]
impl PyPattern {
    /// `<perm>[;x=<ints>][;y=<ints>]`, e.g. "231" or "1;x=0;y=0".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPattern).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pattern('{}')", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn avoids(&self, perm: &PyPermutation) -> bool {
        self.0.avoids(&perm.0)
    }

    fn matches(&self, perm: &PyPermutation) -> bool {
        self.0.matches(&perm.0)
    }

    fn occurrences(&self, perm: &PyPermutation) -> Vec<Vec<usize>> {
        self.0.occurrences(&perm.0).into_iter().map(|o| o.positions).collect()
    }

    fn reverse(&self) -> Self {
        PyPattern(self.0.pat_reverse())
    }

    fn complement(&self) -> Self {
        PyPattern(self.0.pat_complement())
    }

    fn inverse(&self) -> Self {
        PyPattern(self.0.pat_inverse())
    }

    fn shift(&self) -> Self {
        PyPattern(self.0.pat_shift())
    }
}

fn wrap(perms: &[permlab::Permutation]) -> Vec<PyPermutation> {
    perms.iter().cloned().map(PyPermutation).collect()
}

fn budget(max_n: Option<usize>) -> Budget {
    max_n.map(Budget::new).unwrap_or_else(Budget::from_env)
}

/// The class of `perm` under a relation, sorted.
#[pyfunction]
fn class_of(relation_name: &str, perm: &PyPermutation) -> PyResult<Vec<PyPermutation>> {
    Ok(wrap(&relation(relation_name)?.class_of(&perm.0)))
}

/// `{class size: number of classes}` for a relation on S_n.
#[pyfunction]
#[pyo3(signature = (relation_name, n, max_n=None))]
fn class_census(py: Python<'_>, relation_name: &str, n: usize, max_n: Option<usize>) -> PyResult<BTreeMap<u64, u64>> {
    let rel = relation(relation_name)?;
    let c = py.detach(|| relations::census(rel, n, budget(max_n))).map_err(to_py)?;
    Ok(c.by_size)
}

/// Union of the classes all of whose members avoid `pattern`.
#[pyfunction]
#[pyo3(signature = (pattern, relation_name, n, max_n=None))]
fn class_avoiders(
    py: Python<'_>,
    pattern: &PyPattern,
    relation_name: &str,
    n: usize,
    max_n: Option<usize>,
) -> PyResult<Vec<PyPermutation>> {
    let rel = relation(relation_name)?;
    let r = py.detach(|| census::class_avoiders(&pattern.0, rel, n, budget(max_n))).map_err(to_py)?;
    Ok(wrap(r.members()))
}

/// Union of the classes all of whose members match `pattern`.
#[pyfunction]
#[pyo3(signature = (pattern, relation_name, n, max_n=None))]
fn class_matchers(
    py: Python<'_>,
    pattern: &PyPattern,
    relation_name: &str,
    n: usize,
    max_n: Option<usize>,
) -> PyResult<Vec<PyPermutation>> {
    let rel = relation(relation_name)?;
    let r = py.detach(|| census::class_matchers(&pattern.0, rel, n, budget(max_n))).map_err(to_py)?;
    Ok(wrap(r.members()))
}

/// Permutations of length n avoiding every pattern given.
#[pyfunction]
#[pyo3(signature = (patterns, n, max_n=None))]
fn avoid_all(py: Python<'_>, patterns: Vec<PyPattern>, n: usize, max_n: Option<usize>) -> PyResult<Vec<PyPermutation>> {
    let pats: Vec<BivincularPattern> = patterns.into_iter().map(|p| p.0).collect();
    let r = py.detach(|| census::avoid_all(&pats, n, budget(max_n))).map_err(to_py)?;
    Ok(wrap(r.members()))
}

/// `(stable, checked_up_to, witness)` where witness is `(n, perm)` or None.
#[pyfunction]
#[pyo3(signature = (pattern, relation_name, n_max, max_n=None))]
fn is_stable(
    py: Python<'_>,
    pattern: &PyPattern,
    relation_name: &str,
    n_max: usize,
    max_n: Option<usize>,
) -> PyResult<(bool, usize, Option<(usize, PyPermutation)>)> {
    let rel = relation(relation_name)?;
    let r = py.detach(|| census::is_stable(&pattern.0, rel, n_max, budget(max_n))).map_err(to_py)?;
    Ok((r.stable, r.checked_up_to, r.witness.map(|(n, w)| (n, PyPermutation(w)))))
}

/// Insertion and recording tableaux as lists of rows.
#[pyfunction]
fn rsk(perm: &PyPermutation) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let (p, q) = tableau::rsk(&perm.0);
    (p.rows().to_vec(), q.rows().to_vec())
}

#[pyfunction]
fn inverse_rsk(p: Vec<Vec<u32>>, q: Vec<Vec<u32>>) -> PyResult<PyPermutation> {
    let p = YoungTableau::new(p).map_err(to_py)?;
    let q = YoungTableau::new(q).map_err(to_py)?;
    tableau::inverse_rsk(&p, &q).map(PyPermutation).map_err(to_py)
}

/// `(k, permutation)` for each natural permutation of S_n.
#[pyfunction]
fn natural_perms(n: usize) -> Vec<(u64, PyPermutation)> {
    arith::natural_perms(n).into_iter().map(|nu| (nu.k, PyPermutation(nu.perm))).collect()
}

#[pyfunction]
fn sigma(n: u64) -> u64 {
    arith::sigma(n)
}

/// `(sigma, bound, verdict)` with verdict one of "holds", "violated", "inconclusive".
#[pyfunction]
fn robin_check(n: u64) -> PyResult<(u64, f64, &'static str)> {
    let r = arith::robin_check(n).map_err(to_py)?;
    let verdict = match r.verdict {
        arith::RobinVerdict::Holds => "holds",
        arith::RobinVerdict::Violated => "violated",
        arith::RobinVerdict::Inconclusive => "inconclusive",
    };
    Ok((r.sigma, r.bound, verdict))
}

/// Recomputes an embedded sequence; returns `(n, expected, actual)` rows.
#[pyfunction]
#[pyo3(signature = (id, max_n=None))]
fn sequence_check(py: Python<'_>, id: &str, max_n: Option<usize>) -> PyResult<Vec<(usize, u64, Option<u64>)>> {
    let report = py.detach(|| sequences::recompute(id, budget(max_n))).map_err(to_py)?;
    Ok(report.rows.into_iter().map(|r| (r.n, r.expected, r.actual)).collect())
}

#[pymodule]
fn permlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPattern>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(class_of, m)?)?;
    m.add_function(wrap_pyfunction!(class_census, m)?)?;
    m.add_function(wrap_pyfunction!(class_avoiders, m)?)?;
    m.add_function(wrap_pyfunction!(class_matchers, m)?)?;
    m.add_function(wrap_pyfunction!(avoid_all, m)?)?;
    m.add_function(wrap_pyfunction!(is_stable, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_rsk, m)?)?;
    m.add_function(wrap_pyfunction!(natural_perms, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(robin_check, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_check, m)?)?;
    Ok(())
}

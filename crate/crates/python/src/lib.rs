//! Python bindings: `Group`, `Dessin`, classification and number theory.

use std::sync::Arc;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use dessins::classify::{self as cls, AbelianPParams, CyclicParams};
use dessins::dessin::{self as core_dessin, ElemRef};
use dessins::group::{automorphism_group, build_group, FiniteGroup, GroupSpec};
use dessins::numth;
use dessins::ops::{self, TrialityElement};
use dessins::verify::{run_suite, Suite};

pyo3::create_exception!(pydessins, DessinError, PyValueError);

fn err(e: dessins::Error) -> PyErr {
    DessinError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A finite group given by its Cayley table.
#[pyclass(name = "Group", frozen, module = "pydessins")]
struct PyGroup {
    inner: Arc<FiniteGroup>,
}

#[pymethods]
impl PyGroup {
    /// Builds a group from a spec such as `cyclic:6`, `q8` or `metacyclic:8,8,5`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let spec: GroupSpec = spec.parse().map_err(err)?;
        Ok(Self {
            inner: Arc::new(build_group(&spec).map_err(err)?),
        })
    }

    /// Builds a group from a multiplication table, `table[a][b] = a·b`.
    #[staticmethod]
    #[pyo3(signature = (table, labels=None))]
    fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        Ok(Self {
            inner: Arc::new(FiniteGroup::from_rows(&table, labels).map_err(err)?),
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.inner.mul(a, b))
    }

    fn inv(&self, a: usize) -> PyResult<usize> {
        self.check(a)?;
        Ok(self.inner.inv(a))
    }

    fn element_order(&self, a: usize) -> PyResult<usize> {
        self.check(a)?;
        Ok(self.inner.element_order(a))
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn nilpotency_class(&self) -> Option<usize> {
        self.inner.nilpotency_class()
    }

    fn center(&self) -> Vec<usize> {
        self.inner.center()
    }

    fn automorphism_count(&self) -> PyResult<usize> {
        Ok(automorphism_group(&self.inner).map_err(err)?.len())
    }

    fn generating_pairs(&self) -> Vec<(usize, usize)> {
        self.inner.generating_pairs()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group({})", self.inner)
    }
}

impl PyGroup {
    fn check(&self, a: usize) -> PyResult<()> {
        if a < self.inner.order() {
            Ok(())
        } else {
            Err(DessinError::new_err(format!(
                "element {a} out of range for a group of order {}",
                self.inner.order()
            )))
        }
    }
}

/// A regular dessin `(G, x, y)`.
#[pyclass(name = "Dessin", frozen, module = "pydessins")]
struct PyDessin {
    inner: core_dessin::Dessin,
}

fn elem_ref(obj: &Bound<'_, PyAny>) -> PyResult<ElemRef> {
    if let Ok(i) = obj.extract::<usize>() {
        Ok(ElemRef::Index(i))
    } else {
        Ok(ElemRef::Label(obj.extract::<String>()?))
    }
}

fn wrap(d: core_dessin::Dessin) -> PyDessin {
    PyDessin { inner: d }
}

#[pymethods]
impl PyDessin {
    /// `group` is a `Group` or a spec string; `x` and `y` are element indices
    /// or labels.
    #[new]
    fn new(group: &Bound<'_, PyAny>, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<Self> {
        let g = if let Ok(g) = group.cast::<PyGroup>() {
            g.get().inner.clone()
        } else {
            PyGroup::new(&group.extract::<String>()?)?.inner
        };
        let x = elem_ref(x)?.resolve(&g).map_err(err)?;
        let y = elem_ref(y)?.resolve(&g).map_err(err)?;
        Ok(wrap(core_dessin::Dessin::new(g, x, y).map_err(err)?))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(wrap(core_dessin::Dessin::from_json(text).map_err(err)?))
    }

    fn to_json(&self) -> PyResult<String> {
        self.inner.to_json().map_err(err)
    }

    #[getter]
    fn group(&self) -> PyGroup {
        PyGroup {
            inner: self.inner.group_arc().clone(),
        }
    }

    #[getter]
    fn x(&self) -> usize {
        self.inner.x()
    }

    #[getter]
    fn y(&self) -> usize {
        self.inner.y()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn type_triple(&self) -> (usize, usize, usize) {
        self.inner.type_triple()
    }

    fn genus(&self) -> u64 {
        self.inner.genus()
    }

    fn euler_characteristic(&self) -> i64 {
        self.inner.euler_characteristic()
    }

    fn graph(&self) -> String {
        self.inner.underlying_graph().descriptor()
    }

    fn dot(&self) -> String {
        self.inner.underlying_graph().to_dot()
    }

    fn pair_label(&self) -> String {
        self.inner.pair_label()
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn is_reflexible(&self) -> bool {
        self.inner.is_reflexible()
    }

    fn is_totally_symmetric(&self) -> bool {
        self.inner.is_totally_symmetric()
    }

    fn is_isomorphic(&self, other: &PyDessin) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    /// All invariants as a dict with the JSON field names.
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let text = serde_json::to_string(&self.inner.invariants()).map_err(|e| err(e.into()))?;
        json_to_py(py, &text)
    }

    fn dual(&self) -> PyDessin {
        wrap(ops::dual(&self.inner))
    }

    /// `perm` is a permutation of the letters `b`, `w`, `f`, e.g. `"wfb"`.
    fn triality(&self, perm: &str) -> PyResult<PyDessin> {
        let t: TrialityElement = perm.parse().map_err(err)?;
        Ok(wrap(ops::triality(&self.inner, t)))
    }

    fn wilson(&self, i: i64, j: i64) -> PyResult<PyDessin> {
        Ok(wrap(ops::wilson(&self.inner, i, j).map_err(err)?))
    }

    fn join(&self, other: &PyDessin) -> PyResult<PyDessin> {
        Ok(wrap(ops::join(&self.inner, &other.inner).map_err(err)?))
    }

    fn shadow(&self) -> PyResult<PyDessin> {
        Ok(wrap(self.inner.shadow().map_err(err)?))
    }

    fn sylow_decompose(&self) -> PyResult<Vec<PyDessin>> {
        Ok(ops::sylow_decompose(&self.inner)
            .map_err(err)?
            .into_iter()
            .map(wrap)
            .collect())
    }

    /// The group extended by the automorphism swapping `x` and `y`.
    fn extended_group(&self) -> PyResult<PyGroup> {
        Ok(PyGroup {
            inner: Arc::new(ops::extended_group(&self.inner).map_err(err)?),
        })
    }

    fn __eq__(&self, other: &PyDessin) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Dessin({})", self.inner)
    }
}

/// Class representatives of the dessins on a group.
#[pyfunction]
fn classify(group: &Bound<'_, PyAny>) -> PyResult<Vec<PyDessin>> {
    let g = if let Ok(g) = group.cast::<PyGroup>() {
        g.get().inner.clone()
    } else {
        PyGroup::new(&group.extract::<String>()?)?.inner
    };
    let c = dessins::verify::classify_any(&g).map_err(err)?;
    Ok(c.representatives.into_iter().map(wrap).collect())
}

/// Lexicographically least `(r, s)` of every class of dessins on `Z_m`.
#[pyfunction]
fn cyclic_classes(m: u64) -> PyResult<Vec<(u64, u64)>> {
    Ok(cls::cyclic_classes(m)
        .map_err(err)?
        .into_iter()
        .map(|c| (c.r, c.s))
        .collect())
}

#[pyfunction]
fn cyclic_closed_invariants<'py>(
    py: Python<'py>,
    m: u64,
    r: u64,
    s: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let params = CyclicParams::new(m, r, s).map_err(err)?;
    let text = serde_json::to_string(&cls::cyclic_closed_invariants(&params))
        .map_err(|e| err(e.into()))?;
    json_to_py(py, &text)
}

#[pyfunction]
fn abelian_p_dessin(p: u64, a: u32, b: u32, c: u32, e: u64) -> PyResult<PyDessin> {
    let params = AbelianPParams::new(p, a, b, c, e).map_err(err)?;
    Ok(wrap(cls::abelian_p_dessin(&params).map_err(err)?))
}

/// Classes on `Z_n ⊕ Z_m` as a dict with counts, component names and
/// representatives.
#[pyfunction]
fn classify_abelian<'py>(py: Python<'py>, n: u64, m: u64) -> PyResult<Bound<'py, PyDict>> {
    let list = cls::classify_abelian(n, m).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("n", n)?;
    out.set_item("m", m)?;
    out.set_item("total_count", list.total_count)?;
    out.set_item("symmetric_count", list.symmetric_count)?;
    let reps = PyList::empty(py);
    for rep in list.representatives {
        let item = PyDict::new(py);
        let names: Vec<String> = rep.components.iter().map(|c| c.to_string()).collect();
        item.set_item("components", names)?;
        item.set_item("dessin", Py::new(py, wrap(rep.dessin))?)?;
        reps.append(item)?;
    }
    out.set_item("representatives", reps)?;
    Ok(out)
}

/// Runs a named check suite (`c6`, `alt4`, `q8`, `meta64`, `join144`) and
/// returns one dict per check.
#[pyfunction]
fn verify<'py>(py: Python<'py>, suite: &str) -> PyResult<Bound<'py, PyList>> {
    let suite = match suite {
        "c6" => Suite::C6,
        "alt4" => Suite::Alt4,
        "q8" => Suite::Q8,
        "meta64" => Suite::Meta64,
        "join144" => Suite::Join144,
        other => return Err(DessinError::new_err(format!("unknown suite `{other}`"))),
    };
    let out = PyList::empty(py);
    for r in run_suite(&suite).map_err(err)? {
        out.append(json_to_py(py, &r.to_json_line())?)?;
    }
    Ok(out)
}

#[pyfunction]
fn euler_phi(n: u64) -> u64 {
    numth::euler_phi(n)
}

#[pyfunction]
fn dedekind_psi(n: u64) -> BigUint {
    numth::dedekind_psi(n)
}

#[pyfunction]
fn jordan_totient(k: u32, n: u64) -> BigUint {
    numth::jordan_totient(k, n)
}

#[pyfunction]
fn sqrt_one_units(m: u64) -> Vec<u64> {
    numth::sqrt_one_units(m)
}

#[pymodule]
fn pydessins(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DessinError", m.py().get_type::<DessinError>())?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyDessin>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_classes, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_closed_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_p_dessin, m)?)?;
    m.add_function(wrap_pyfunction!(classify_abelian, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(dedekind_psi, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_totient, m)?)?;
    m.add_function(wrap_pyfunction!(sqrt_one_units, m)?)?;
    Ok(())
}

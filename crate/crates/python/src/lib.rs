//! Python bindings: algebras, the classification pipeline, module-category
//! queries by registry name, and the verification suites.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use preproj::algebra::{nakayama_algebra, preprojective_of_type, GradedAlgebra};
use preproj::classify::{records_to_tsv, ClassificationRecord, Classifier as CoreClassifier, RecordRow, Subcat};
use preproj::linalg::Fp;
use preproj::modrep::{ext_dim, hom_dim, is_self_injective, RegistryConfig};
use preproj::quiver::DynkinType;
use preproj::weyl::{parse_word, WeylGroup as CoreWeylGroup, DEFAULT_ENUMERATION_CAP};
use preproj_cli::suites::run_suite;
use preproj_cli::{AlgebraSpec, CliError, Config};

fn err(e: preproj::Error) -> PyErr {
    match e {
        preproj::Error::TheoremViolation(_) | preproj::Error::Inconsistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn cli_err(e: CliError) -> PyErr {
    match e {
        CliError::Core(e) => err(e),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn field(p: u32) -> PyResult<Fp> {
    Fp::new(p).map_err(err)
}

fn dynkin(ty: &str) -> PyResult<DynkinType> {
    ty.parse().map_err(err)
}

#[pyclass(frozen)]
struct Algebra {
    inner: Arc<GradedAlgebra>,
}

#[pymethods]
impl Algebra {
    /// Preprojective algebra of a Dynkin type such as "A3".
    #[staticmethod]
    #[pyo3(signature = (ty, p = 1009))]
    fn preprojective(ty: &str, p: u32) -> PyResult<Self> {
        Ok(Algebra { inner: Arc::new(preprojective_of_type(dynkin(ty)?, field(p)?).map_err(err)?) })
    }

    #[staticmethod]
    #[pyo3(signature = (n, h, p = 1009))]
    fn nakayama(n: usize, h: usize, p: u32) -> PyResult<Self> {
        Ok(Algebra { inner: Arc::new(nakayama_algebra(n, h, field(p)?).map_err(err)?) })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }
    #[getter]
    fn field_char(&self) -> u32 {
        self.inner.field().p()
    }

    /// `dim e_j A e_i` with 1-based vertices.
    fn bigraded_dim(&self, i: usize, j: usize) -> PyResult<usize> {
        let n = self.inner.vertex_count();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(PyValueError::new_err(format!("vertices are 1..={n}")));
        }
        Ok(self.inner.bigraded_dim(i - 1, j - 1))
    }

    fn is_self_injective(&self) -> bool {
        is_self_injective(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Algebra({}, dim={}, p={})", self.inner.name(), self.inner.dim(), self.inner.field().p())
    }
}

#[pyclass(frozen)]
struct WeylGroup {
    inner: CoreWeylGroup,
}

#[pymethods]
impl WeylGroup {
    #[new]
    fn new(ty: &str) -> PyResult<Self> {
        Ok(WeylGroup { inner: CoreWeylGroup::of_type(dynkin(ty)?) })
    }

    /// Shortlex normal forms (1-based) of all elements, by length.
    fn elements(&self) -> PyResult<Vec<Vec<usize>>> {
        let all = self.inner.enumerate_all(DEFAULT_ENUMERATION_CAP).map_err(err)?;
        Ok(all.iter().map(|w| w.word().iter().map(|i| i + 1).collect()).collect())
    }

    fn length(&self, word: &str) -> PyResult<usize> {
        let w = self.inner.from_word(&parse_word(word, self.inner.rank()).map_err(err)?).map_err(err)?;
        Ok(w.length())
    }

    fn sigma4_label(&self, word: &str) -> PyResult<String> {
        let w = self.inner.from_word(&parse_word(word, self.inner.rank()).map_err(err)?).map_err(err)?;
        self.inner.sigma4_label(&w).map_err(err)
    }
}

#[pyclass(frozen)]
struct Classifier {
    inner: CoreClassifier,
}

impl Classifier {
    fn id(&self, name: &str) -> PyResult<usize> {
        self.inner.registry().id_by_name(name).ok_or_else(|| PyValueError::new_err(format!("no module named {name:?}")))
    }

    fn records(&self) -> PyResult<Vec<ClassificationRecord>> {
        self.inner.classify_all().map_err(err)
    }
}

fn row_dict<'py>(py: Python<'py>, row: &RecordRow) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("label", &row.label)?;
    d.set_item("word", &row.word)?;
    d.set_item("length", row.length)?;
    d.set_item("ideal_dim", row.ideal_dim)?;
    d.set_item("generators", &row.generators)?;
    d.set_item("torsion", &row.torsion)?;
    d.set_item("wide", &row.wide)?;
    d.set_item("u", &row.u)?;
    d.set_item("v", &row.v)?;
    d.set_item("tag", &row.tag)?;
    d.set_item("homological", row.homological)?;
    Ok(d)
}

#[pymethods]
impl Classifier {
    #[new]
    #[pyo3(signature = (ty, p = 1009, max_registry = 400))]
    fn new(py: Python<'_>, ty: &str, p: u32, max_registry: usize) -> PyResult<Self> {
        let ty = dynkin(ty)?;
        let f = field(p)?;
        let config = RegistryConfig { max_modules: max_registry, ..RegistryConfig::default() };
        let inner = py.detach(|| CoreClassifier::preprojective(ty, f, config)).map_err(err)?;
        Ok(Classifier { inner })
    }

    #[getter]
    fn algebra(&self) -> Algebra {
        Algebra { inner: self.inner.algebra().clone() }
    }

    /// Names of the indecomposable modules, in registry order.
    fn modules(&self) -> Vec<String> {
        self.inner.registry().names().to_vec()
    }

    fn dims(&self, name: &str) -> PyResult<Vec<usize>> {
        Ok(self.inner.registry().get(self.id(name)?).dims().to_vec())
    }

    fn hom_dim(&self, x: &str, y: &str) -> PyResult<usize> {
        let reg = self.inner.registry();
        hom_dim(reg.get(self.id(x)?), reg.get(self.id(y)?)).map_err(err)
    }

    fn ext_dim(&self, x: &str, y: &str, degree: usize) -> PyResult<usize> {
        let reg = self.inner.registry();
        ext_dim(reg.get(self.id(x)?), reg.get(self.id(y)?), degree).map_err(err)
    }

    /// One dict per Weyl group element.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let records = py.detach(|| self.records())?;
        records.iter().map(|r| row_dict(py, &r.row(self.inner.registry()))).collect()
    }

    fn to_tsv(&self, py: Python<'_>) -> PyResult<String> {
        let records = py.detach(|| self.records())?;
        Ok(records_to_tsv(&records, self.inner.registry()))
    }

    /// Whether `add` of the named modules passes the homological test.
    fn is_homological(&self, names: Vec<String>) -> PyResult<bool> {
        let ids = names.iter().map(|n| self.id(n)).collect::<PyResult<Vec<_>>>()?;
        self.inner.is_homological(&Subcat::new(ids)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Classifier({}, {} indecomposables)", self.inner.algebra().name(), self.inner.registry().len())
    }
}

/// Runs a verification suite; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite, p = 1009, ty = None, nakayama = None))]
fn verify(py: Python<'_>, suite: &str, p: u32, ty: Option<&str>, nakayama: Option<(usize, usize)>) -> PyResult<(bool, String)> {
    let mut cfg = Config::new(p).map_err(cli_err)?;
    cfg.algebra = match (ty, nakayama) {
        (Some(t), None) => Some(AlgebraSpec::Preprojective(dynkin(t)?)),
        (None, Some((n, h))) => Some(AlgebraSpec::Nakayama { n, h }),
        (None, None) => None,
        (Some(_), Some(_)) => return Err(PyValueError::new_err("give ty or nakayama, not both")),
    };
    let report = py.detach(|| run_suite(suite, &cfg)).map_err(cli_err)?;
    Ok((report.passed(), report.render()))
}

#[pymodule]
fn pypreproj(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<WeylGroup>()?;
    m.add_class::<Classifier>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module<R>(f: impl FnOnce(&Bound<'_, PyModule>) -> R) -> R {
    Python::attach(|py| {
        let m = PyModule::new(py, "extqsym").unwrap();
        extqsym_py::extqsym_module(&m).unwrap();
        f(&m)
    })
}

#[test]
fn hilbert_and_coefficients() {
    with_module(|m| {
        let h: Vec<u64> = m.getattr("hilbert_series").unwrap().call1((9,)).unwrap().extract().unwrap();
        assert_eq!(h, [1, 8, 27, 48, 42]);
        let a: u64 = m.getattr("product_coefficient").unwrap().call1((4, 2)).unwrap().extract().unwrap();
        assert_eq!(a, 3);
    });
}

#[test]
fn polynomial_class_round_trips() {
    with_module(|m| {
        let cls = m.getattr("Polynomial").unwrap();
        let p = cls.call1((4, "3/2*t1*t3 - t2")).unwrap();
        assert_eq!(p.str().unwrap().to_string(), "3/2*t1*t3 - t2");
        let json: String = p.call_method0("to_json").unwrap().extract().unwrap();
        let back = cls.call_method1("from_json", (json,)).unwrap();
        assert!(p.eq(&back).unwrap());
        let odd = cls.call1((4, "t1 - 2*t2 + t1*t2*t4")).unwrap();
        let sq = odd.call_method1("__mul__", (&odd,)).unwrap();
        assert!(sq.call_method0("is_zero").unwrap().extract::<bool>().unwrap());
    });
}

#[test]
fn errors_become_python_exceptions() {
    with_module(|m| {
        let err = m.getattr("Polynomial").unwrap().call1((2, "t3")).unwrap_err();
        Python::attach(|py| assert!(err.is_instance(py, &m.getattr("ExtqsymError").unwrap())));
        let err = m.getattr("hilbert_series").unwrap().call1((100,)).unwrap_err();
        Python::attach(|py| assert!(err.is_instance(py, &m.getattr("CapExceededError").unwrap())));
    });
}

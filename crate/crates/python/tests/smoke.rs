//! Runs the Python smoke script against the module linked into an embedded
//! interpreter.

use std::ffi::CString;

use pyhypercount::pyhypercount;
use pyo3::prelude::*;
use pyo3::types::PyDict;

#[test]
fn python_smoke_script() {
    pyo3::append_to_inittab!(pyhypercount);
    Python::initialize();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/python/smoke_test.py");
    let code = CString::new(std::fs::read_to_string(path).unwrap()).unwrap();
    Python::attach(|py| {
        let globals = PyDict::new(py);
        globals.set_item("__name__", "__main__").unwrap();
        py.run(&code, Some(&globals), None)
            .map_err(|e| e.print(py))
            .unwrap();
    });
}

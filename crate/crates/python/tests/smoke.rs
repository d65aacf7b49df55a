use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

use p3walls_py::p3walls_py;

#[test]
fn smoke_script_passes_in_embedded_interpreter() {
    pyo3::append_to_inittab!(p3walls_py);
    Python::initialize();
    let source = include_str!("../python/smoke_test.py");
    let code = CString::new(source).unwrap();
    Python::attach(|py| {
        py.import("sys").unwrap().setattr("argv", vec!["smoke_test.py"]).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("__name__", "__main__").unwrap();
        py.run(&code, Some(&globals), None).unwrap();
    });
}

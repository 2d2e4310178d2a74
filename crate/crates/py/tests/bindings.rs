use pymatroid::{demo, pack_bases, union_base, union_membership, PyMatroid};
use pyo3::prelude::*;

fn ids(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

#[test]
fn matroid_methods() {
    let m = PyMatroid::uniform(2, ids(&["a", "b", "c"])).unwrap();
    assert_eq!(m.rank(None).unwrap(), 2);
    assert!(m.is_independent(ids(&["a", "c"])).unwrap());
    assert!(!m.is_independent(ids(&["a", "b", "c"])).unwrap());
    assert_eq!(m.bases().unwrap().len(), 3);
    assert_eq!(m.dual().rank(None).unwrap(), 1);
    assert_eq!(m.mk(1).unwrap().rank(None).unwrap(), 1);
    let back = PyMatroid::from_json(&m.to_json()).unwrap();
    assert_eq!(back.ground(), m.ground());
    assert!(m.is_independent(ids(&["zz"])).is_err());
    assert!(PyMatroid::from_json("{\"type\":\"uniform\"}").is_err());
}

#[test]
fn union_functions() {
    let a = PyMatroid::uniform(2, ids(&["a", "b", "c"])).unwrap();
    let b = PyMatroid::circuit(ids(&["a", "b", "c"])).unwrap();
    let rep = union_membership(&a, &b, ids(&["a", "b", "c"])).unwrap().unwrap();
    assert_eq!(rep.set(), ids(&["a", "b", "c"]));
    let one = PyMatroid::uniform(1, ids(&["a", "b", "c"])).unwrap();
    assert!(union_membership(&one, &one, ids(&["a", "b", "c"])).unwrap().is_none());
    assert_eq!(union_base(&one, &one).unwrap().set().len(), 2);
    let other = PyMatroid::uniform(1, ids(&["x"])).unwrap();
    assert!(union_membership(&one, &other, vec![]).is_err());
}

#[test]
fn reports_become_dicts() {
    Python::attach(|py| {
        let m = PyMatroid::uniform(1, ids(&["a", "b"])).unwrap();
        let r = pack_bases(py, &m, 3).unwrap();
        let verdict: String = r.bind(py).get_item("verdict").unwrap().extract().unwrap();
        assert_eq!(verdict, "not-packable");
        let axioms = m.check_axioms(py).unwrap();
        let i3: String = axioms.bind(py).get_item("I3").unwrap().extract().unwrap();
        assert_eq!(i3, "pass");
        let d = demo(py, "ladder", 3, 0, false).unwrap();
        let certified: bool = d.bind(py).get_item("certified").unwrap().extract().unwrap();
        assert!(certified);
    });
}

use std::ffi::{CStr, CString};
use std::ptr;

use impsep_ffi::*;

const THETA: &str = "p sep 5 5\ne 1 2\ne 2 5\ne 1 3\ne 3 4\ne 4 5\nx 1\ny 5\n";

fn parse(text: &str) -> *mut ImpsepInstance {
    let c = CString::new(text).unwrap();
    let mut inst = ptr::null_mut();
    assert_eq!(unsafe { impsep_instance_parse(c.as_ptr(), &mut inst) }, ImpsepStatus::Ok);
    inst
}

fn collect(sets: *const ImpsepSets) -> Vec<Vec<u32>> {
    (0..unsafe { impsep_sets_count(sets) })
        .map(|i| {
            let (mut ids, mut len) = (ptr::null(), 0usize);
            assert_eq!(unsafe { impsep_sets_get(sets, i, &mut ids, &mut len) }, ImpsepStatus::Ok);
            if len == 0 {
                Vec::new()
            } else {
                unsafe { std::slice::from_raw_parts(ids, len) }.to_vec()
            }
        })
        .collect()
}

fn last_error() -> String {
    let p = impsep_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn separators_of_theta() {
    let inst = parse(THETA);
    assert_eq!(unsafe { impsep_instance_vertex_count(inst) }, 5);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { impsep_smallest_important(inst, &mut out) }, ImpsepStatus::Ok);
    assert_eq!(collect(out), vec![vec![2, 4]]);
    unsafe { impsep_sets_free(out) };
    assert_eq!(unsafe { impsep_min_separator(inst, &mut out) }, ImpsepStatus::Ok);
    assert_eq!(collect(out)[0].len(), 2);
    unsafe { impsep_sets_free(out) };
    assert_eq!(unsafe { impsep_enumerate_important(inst, 1, &mut out) }, ImpsepStatus::Ok);
    assert_eq!(collect(out), vec![vec![2, 4]]);
    let (mut ids, mut len) = (ptr::null(), 0usize);
    assert_eq!(unsafe { impsep_sets_get(out, 5, &mut ids, &mut len) }, ImpsepStatus::IndexOutOfRange);
    unsafe { impsep_sets_free(out) };
    unsafe { impsep_instance_free(inst) };
}

#[test]
fn built_from_edges() {
    let edges = [1u32, 2, 1, 3, 1, 4];
    let mut inst = ptr::null_mut();
    assert_eq!(unsafe { impsep_instance_from_edges(4, edges.as_ptr(), 3, &mut inst) }, ImpsepStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { impsep_min_separator(inst, &mut out) }, ImpsepStatus::MissingSets);
    let t = [2u32, 3, 4];
    assert_eq!(unsafe { impsep_instance_set_terminals(inst, t.as_ptr(), 3) }, ImpsepStatus::Ok);
    let (mut m, mut term) = (0usize, 0u32);
    assert_eq!(unsafe { impsep_mwc_solve(inst, 0, &mut out, &mut m, &mut term) }, ImpsepStatus::Ok);
    assert_eq!((m, term), (1, 2));
    assert_eq!(collect(out), vec![vec![1]]);
    unsafe { impsep_sets_free(out) };
    let x = [2u32];
    let y = [2u32, 3];
    assert_eq!(unsafe { impsep_instance_set_x(inst, x.as_ptr(), 1) }, ImpsepStatus::Ok);
    assert_eq!(unsafe { impsep_instance_set_y(inst, y.as_ptr(), 2) }, ImpsepStatus::InvalidArgument);
    let bad = [9u32];
    assert_eq!(unsafe { impsep_instance_set_y(inst, bad.as_ptr(), 1) }, ImpsepStatus::InvalidVertex);
    unsafe { impsep_instance_free(inst) };
}

#[test]
fn decisions_and_errors() {
    // 6-cycle with terminals 1, 3, 5: m = 2 but three vertices are needed
    let inst = parse("p sep 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\nt 1 3 5\n");
    let mut out = ptr::null_mut();
    let mut m = 0usize;
    assert_eq!(unsafe { impsep_mwc_solve(inst, 0, &mut out, &mut m, ptr::null_mut()) }, ImpsepStatus::No);
    assert!(out.is_null());
    assert_eq!(m, 2);
    assert_eq!(unsafe { impsep_mwc_solve(inst, 1, &mut out, ptr::null_mut(), ptr::null_mut()) }, ImpsepStatus::Ok);
    assert_eq!(collect(out)[0].len(), 3);
    unsafe { impsep_sets_free(out) };
    unsafe { impsep_instance_free(inst) };

    let edge = parse("p sep 2 1\ne 1 2\nx 1\ny 2\n");
    assert_eq!(unsafe { impsep_min_separator(edge, &mut out) }, ImpsepStatus::NoSeparatorExists);
    assert_eq!(last_error(), "no separator exists");
    unsafe { impsep_instance_free(edge) };

    let text = CString::new("p sep 2 1\ne 1 1\n").unwrap();
    let mut inst = ptr::null_mut();
    assert_eq!(unsafe { impsep_instance_parse(text.as_ptr(), &mut inst) }, ImpsepStatus::Parse);
    assert!(last_error().starts_with("line 2:"));
    assert_eq!(unsafe { impsep_instance_parse(ptr::null(), &mut inst) }, ImpsepStatus::NullPointer);
    assert_eq!(unsafe { impsep_min_separator(ptr::null(), &mut out) }, ImpsepStatus::NullPointer);
}

#[test]
fn status_names() {
    let name = |s: i32| unsafe { CStr::from_ptr(impsep_status_name(s)) }.to_str().unwrap();
    assert_eq!(name(ImpsepStatus::Ok as i32), "ok");
    assert_eq!(name(ImpsepStatus::AdjacentTerminals as i32), "adjacent terminals");
    assert_eq!(name(99), "unknown status");
    unsafe {
        impsep_instance_free(ptr::null_mut());
        impsep_sets_free(ptr::null_mut());
    }
}

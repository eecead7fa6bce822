//! C ABI over the `impsep` library.
//!
//! Instances and result lists are opaque heap handles owned by the caller
//! and released with the matching `_free` function. Every fallible call
//! returns an [`ImpsepStatus`]; on failure a description is available from
//! [`impsep_last_error`] until the next call on the same thread. No call
//! unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use impsep::{
    enumerate_important, lower_bound_m, min_separator, smallest_important_separator, solve_above_guarantee, Error,
    Graph, GraphFile, MwcInstance, VertexSet,
};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpsepStatus {
    Ok = 0,
    /// A decision query answered no.
    No = 1,
    NullPointer = 2,
    InvalidVertex = 3,
    InvalidArgument = 4,
    NotASeparator = 5,
    NoSeparatorExists = 6,
    NonMinimalSeparator = 7,
    NotNormalized = 8,
    NotInNeighborhood = 9,
    AdjacentTerminals = 10,
    Parse = 11,
    MissingSets = 12,
    IndexOutOfRange = 13,
    Panic = 14,
}

/// A graph with optional source, target and terminal sets.
pub struct ImpsepInstance {
    graph: Graph,
    x: Option<VertexSet>,
    y: Option<VertexSet>,
    terminals: Option<VertexSet>,
}

/// An ordered list of vertex sets, each sorted ascending.
pub struct ImpsepSets {
    sets: Vec<Vec<u32>>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ImpsepStatus {
    match e {
        Error::InvalidVertex(_) => ImpsepStatus::InvalidVertex,
        Error::InvalidArgument(_) => ImpsepStatus::InvalidArgument,
        Error::NotASeparator => ImpsepStatus::NotASeparator,
        Error::NoSeparatorExists => ImpsepStatus::NoSeparatorExists,
        Error::NonMinimalSeparator => ImpsepStatus::NonMinimalSeparator,
        Error::NotNormalized => ImpsepStatus::NotNormalized,
        Error::NotInNeighborhood => ImpsepStatus::NotInNeighborhood,
        Error::AdjacentTerminals(..) => ImpsepStatus::AdjacentTerminals,
        Error::Parse { .. } => ImpsepStatus::Parse,
    }
}

fn fail(status: ImpsepStatus, msg: impl Into<String>) -> ImpsepStatus {
    set_error(msg.into());
    status
}

/// Runs `body`, turning library errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<ImpsepStatus, ImpsepStatus>) -> ImpsepStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(_) => fail(ImpsepStatus::Panic, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, ImpsepStatus>;
}

impl<T> OrStatus<T> for Result<T, Error> {
    fn or_status(self) -> Result<T, ImpsepStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

unsafe fn instance<'a>(p: *const ImpsepInstance) -> Result<&'a ImpsepInstance, ImpsepStatus> {
    p.as_ref().ok_or_else(|| fail(ImpsepStatus::NullPointer, "instance pointer is null"))
}

unsafe fn id_slice<'a>(ids: *const u32, len: usize) -> Result<&'a [u32], ImpsepStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if ids.is_null() {
        return Err(fail(ImpsepStatus::NullPointer, "id array is null"));
    }
    Ok(std::slice::from_raw_parts(ids, len))
}

fn check_out<T>(out: *mut *mut T) -> Result<(), ImpsepStatus> {
    if out.is_null() {
        return Err(fail(ImpsepStatus::NullPointer, "output pointer is null"));
    }
    Ok(())
}

fn source_target(inst: &ImpsepInstance) -> Result<(&VertexSet, &VertexSet), ImpsepStatus> {
    match (&inst.x, &inst.y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(fail(ImpsepStatus::MissingSets, "source and target sets are not set")),
    }
}

unsafe fn emit(out: *mut *mut ImpsepSets, sets: Vec<Vec<u32>>) {
    *out = Box::into_raw(Box::new(ImpsepSets { sets }));
}

/// Parses an instance file held in the nul-terminated string `text`.
///
/// # Safety
/// `text` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_parse(text: *const c_char, out: *mut *mut ImpsepInstance) -> ImpsepStatus {
    guard(|| {
        check_out(out)?;
        if text.is_null() {
            return Err(fail(ImpsepStatus::NullPointer, "text is null"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(ImpsepStatus::Parse, "text is not UTF-8"))?;
        let f = GraphFile::parse(text).or_status()?;
        *out = Box::into_raw(Box::new(ImpsepInstance { graph: f.graph, x: f.x, y: f.y, terminals: f.terminals }));
        Ok(ImpsepStatus::Ok)
    })
}

/// Builds an instance on vertices `1..=n`; `edges` holds `2 * edge_count`
/// ids, one pair per edge.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable ids and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_from_edges(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut ImpsepInstance,
) -> ImpsepStatus {
    guard(|| {
        check_out(out)?;
        let flat = id_slice(edges, edge_count.saturating_mul(2))?;
        let pairs: Vec<(u32, u32)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let graph = Graph::with_vertices(n, &pairs).or_status()?;
        *out = Box::into_raw(Box::new(ImpsepInstance { graph, x: None, y: None, terminals: None }));
        Ok(ImpsepStatus::Ok)
    })
}

/// # Safety
/// `inst` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_free(inst: *mut ImpsepInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

#[derive(Clone, Copy)]
enum Slot {
    X,
    Y,
    Terminals,
}

unsafe fn set_slot(inst: *mut ImpsepInstance, slot: Slot, ids: *const u32, len: usize) -> ImpsepStatus {
    guard(|| {
        let inst = inst.as_mut().ok_or_else(|| fail(ImpsepStatus::NullPointer, "instance pointer is null"))?;
        let set: VertexSet = id_slice(ids, len)?.iter().copied().collect();
        if let Some(&v) = set.iter().find(|&&v| !inst.graph.contains(v)) {
            return Err(fail(ImpsepStatus::InvalidVertex, format!("vertex {v} is not in the graph")));
        }
        let other = match slot {
            Slot::X => inst.y.as_ref(),
            Slot::Y => inst.x.as_ref(),
            Slot::Terminals => None,
        };
        if other.is_some_and(|o| !o.is_disjoint(&set)) {
            return Err(fail(ImpsepStatus::InvalidArgument, "source and target sets overlap"));
        }
        match slot {
            Slot::X => inst.x = Some(set),
            Slot::Y => inst.y = Some(set),
            Slot::Terminals => inst.terminals = Some(set),
        }
        Ok(ImpsepStatus::Ok)
    })
}

/// Sets the source set X.
///
/// # Safety
/// `inst` must be a live instance and `ids` must point to `len` readable ids.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_set_x(inst: *mut ImpsepInstance, ids: *const u32, len: usize) -> ImpsepStatus {
    set_slot(inst, Slot::X, ids, len)
}

/// Sets the target set Y.
///
/// # Safety
/// `inst` must be a live instance and `ids` must point to `len` readable ids.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_set_y(inst: *mut ImpsepInstance, ids: *const u32, len: usize) -> ImpsepStatus {
    set_slot(inst, Slot::Y, ids, len)
}

/// Sets the terminal set.
///
/// # Safety
/// `inst` must be a live instance and `ids` must point to `len` readable ids.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_set_terminals(
    inst: *mut ImpsepInstance,
    ids: *const u32,
    len: usize,
) -> ImpsepStatus {
    set_slot(inst, Slot::Terminals, ids, len)
}

/// Number of vertices, 0 for a null instance.
///
/// # Safety
/// `inst` must be null or a live instance.
#[no_mangle]
pub unsafe extern "C" fn impsep_instance_vertex_count(inst: *const ImpsepInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.graph.vertex_count())
}

/// A minimum X-Y separator, as a list holding one set.
///
/// # Safety
/// `inst` must be a live instance and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn impsep_min_separator(inst: *const ImpsepInstance, out: *mut *mut ImpsepSets) -> ImpsepStatus {
    guard(|| {
        check_out(out)?;
        let inst = instance(inst)?;
        let (x, y) = source_target(inst)?;
        let k = min_separator(&inst.graph, x, y).or_status()?;
        emit(out, vec![k.into_cut().into_iter().collect()]);
        Ok(ImpsepStatus::Ok)
    })
}

/// The smallest important X-Y separator, as a list holding one set.
///
/// # Safety
/// `inst` must be a live instance and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn impsep_smallest_important(
    inst: *const ImpsepInstance,
    out: *mut *mut ImpsepSets,
) -> ImpsepStatus {
    guard(|| {
        check_out(out)?;
        let inst = instance(inst)?;
        let (x, y) = source_target(inst)?;
        let k = smallest_important_separator(&inst.graph, x, y).or_status()?;
        emit(out, vec![k.into_cut().into_iter().collect()]);
        Ok(ImpsepStatus::Ok)
    })
}

/// All important X-Y separators of excess at most `k`, ordered by size and
/// then lexicographically.
///
/// # Safety
/// `inst` must be a live instance and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn impsep_enumerate_important(
    inst: *const ImpsepInstance,
    k: usize,
    out: *mut *mut ImpsepSets,
) -> ImpsepStatus {
    guard(|| {
        check_out(out)?;
        let inst = instance(inst)?;
        let (x, y) = source_target(inst)?;
        let mut sets: Vec<Vec<u32>> = enumerate_important(&inst.graph, x, y, k)
            .or_status()?
            .into_iter()
            .map(|s| s.into_cut().into_iter().collect())
            .collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        emit(out, sets);
        Ok(ImpsepStatus::Ok)
    })
}

/// Decides whether a multiway cut of size at most `m + k` exists. Returns
/// `Ok` with the cut in `out` (a list holding one set), or `No` leaving
/// `out` null. `m` and the terminal attaining it are written when the
/// pointers are non-null.
///
/// # Safety
/// `inst` must be a live instance, `out` writable, `m` and `terminal` null or writable.
#[no_mangle]
pub unsafe extern "C" fn impsep_mwc_solve(
    inst: *const ImpsepInstance,
    k: usize,
    out: *mut *mut ImpsepSets,
    m: *mut usize,
    terminal: *mut u32,
) -> ImpsepStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let inst = instance(inst)?;
        let Some(ts) = inst.terminals.clone() else {
            return Err(fail(ImpsepStatus::MissingSets, "terminal set is not set"));
        };
        let mwc = MwcInstance::new(inst.graph.clone(), ts).or_status()?;
        let (bound, t) = lower_bound_m(&mwc).or_status()?;
        if !m.is_null() {
            *m = bound;
        }
        if !terminal.is_null() {
            *terminal = t;
        }
        match solve_above_guarantee(&mwc, k).or_status()? {
            Some(cert) => {
                emit(out, vec![cert.into_cut().into_iter().collect()]);
                Ok(ImpsepStatus::Ok)
            }
            None => Ok(ImpsepStatus::No),
        }
    })
}

/// Number of sets in the list, 0 for null.
///
/// # Safety
/// `sets` must be null or a live list.
#[no_mangle]
pub unsafe extern "C" fn impsep_sets_count(sets: *const ImpsepSets) -> usize {
    sets.as_ref().map_or(0, |s| s.sets.len())
}

/// Borrows set `index`: writes its ids pointer and length. The pointer stays
/// valid until the list is freed.
///
/// # Safety
/// `sets` must be a live list; `ids` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn impsep_sets_get(
    sets: *const ImpsepSets,
    index: usize,
    ids: *mut *const u32,
    len: *mut usize,
) -> ImpsepStatus {
    guard(|| {
        let sets = sets.as_ref().ok_or_else(|| fail(ImpsepStatus::NullPointer, "list pointer is null"))?;
        if ids.is_null() || len.is_null() {
            return Err(fail(ImpsepStatus::NullPointer, "output pointer is null"));
        }
        let s = sets
            .sets
            .get(index)
            .ok_or_else(|| fail(ImpsepStatus::IndexOutOfRange, format!("index {index} out of range")))?;
        *ids = if s.is_empty() { ptr::null() } else { s.as_ptr() };
        *len = s.len();
        Ok(ImpsepStatus::Ok)
    })
}

/// # Safety
/// `sets` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn impsep_sets_free(sets: *mut ImpsepSets) {
    if !sets.is_null() {
        drop(Box::from_raw(sets));
    }
}

/// Description of the last failure on this thread, or null. Valid until the
/// next library call on the same thread.
#[no_mangle]
pub extern "C" fn impsep_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code; unknown codes get a generic name.
#[no_mangle]
pub extern "C" fn impsep_status_name(status: i32) -> *const c_char {
    let s: &'static CStr = match status {
        0 => c"ok",
        1 => c"no",
        2 => c"null pointer",
        3 => c"invalid vertex",
        4 => c"invalid argument",
        5 => c"not a separator",
        6 => c"no separator exists",
        7 => c"separator is not minimal",
        8 => c"graph is not normalized",
        9 => c"set is not in the neighborhood of X",
        10 => c"adjacent terminals",
        11 => c"parse error",
        12 => c"required vertex sets are missing",
        13 => c"index out of range",
        14 => c"internal panic",
        _ => c"unknown status",
    };
    s.as_ptr()
}

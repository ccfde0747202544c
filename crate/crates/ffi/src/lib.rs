//! C ABI for `nzflow`.
//!
//! Objects are opaque handles created by `nzf_*_new`/`nzf_*_parse` or
//! returned through out-parameters, and released with the matching
//! `nzf_*_free`. Every fallible call returns an [`NzfStatus`]; the message
//! of the most recent failure on the calling thread is available from
//! [`nzf_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use nzflow::flow::{count_flows, search_nowhere_zero, verify_flow, Flow, SearchOutcome};
use nzflow::fourflow::{cover4, glue_four};
use nzflow::glue::{glue_common, GlueInstance};
use nzflow::{io, make_group, EdgeSet, Error, Group, MultiGraph};

/// Result of a call. The first four match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NzfStatus {
    Ok = 0,
    /// No nowhere-zero flow exists.
    NoFlow = 1,
    /// Malformed input or a failed validation.
    Invalid = 2,
    /// A theorem hypothesis does not hold for the input.
    Hypothesis = 3,
    /// A required pointer argument was null or not valid UTF-8.
    BadArgument = 4,
    /// An internal error or a caught panic.
    Internal = 5,
}

pub struct NzfGraph(MultiGraph);
pub struct NzfGroup(Group);
pub struct NzfFlow(Flow);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Fail {
    Lib(Error),
    Arg(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NzfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NzfStatus::Ok,
        Ok(Err(Fail::Arg(msg))) => {
            set_error(msg.to_string());
            NzfStatus::BadArgument
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            match e {
                Error::Internal(_) => NzfStatus::Internal,
                _ => match e.exit_code() {
                    1 => NzfStatus::NoFlow,
                    3 => NzfStatus::Hypothesis,
                    _ => NzfStatus::Invalid,
                },
            }
        }
        Err(_) => {
            set_error("panic inside nzflow".into());
            NzfStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Arg("null handle"))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Arg("null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Arg("string is not UTF-8"))
}

unsafe fn out<T>(dst: *mut *mut T, value: T) -> Result<(), Fail> {
    if dst.is_null() {
        return Err(Fail::Arg("null output pointer"));
    }
    *dst = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn edge_set(g: &MultiGraph, ids: *const usize, len: usize) -> Result<EdgeSet, Fail> {
    let ids = if len == 0 {
        &[][..]
    } else if ids.is_null() {
        return Err(Fail::Arg("null edge id array"));
    } else {
        slice::from_raw_parts(ids, len)
    };
    Ok(g.subset(ids.iter().copied())?)
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call on this thread.
#[no_mangle]
pub extern "C" fn nzf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Free a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nzf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` values; `graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_graph_new(
    n: usize,
    endpoints: *const usize,
    m: usize,
    graph: *mut *mut NzfGraph,
) -> NzfStatus {
    guard(|| {
        let flat = if m == 0 {
            &[][..]
        } else if endpoints.is_null() {
            return Err(Fail::Arg("null endpoint array"));
        } else {
            slice::from_raw_parts(endpoints, 2 * m)
        };
        let edges: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        out(graph, NzfGraph(MultiGraph::new(n, &edges)?))
    })
}

/// Parse the `graph <n>` / `u v` text format.
///
/// # Safety
/// `src` must be a nul-terminated string; `graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_graph_parse(
    src: *const c_char,
    graph: *mut *mut NzfGraph,
) -> NzfStatus {
    guard(|| out(graph, NzfGraph(io::parse_graph(text(src)?)?)))
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nzf_graph_free(g: *mut NzfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nzf_graph_edge_count(g: *const NzfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nzf_graph_vertex_count(g: *const NzfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Create a group from a descriptor such as `z:4` or `gf:2:2`.
///
/// # Safety
/// `desc` must be a nul-terminated string; `group` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_group_new(
    desc: *const c_char,
    group: *mut *mut NzfGroup,
) -> NzfStatus {
    guard(|| out(group, NzfGroup(make_group(text(desc)?)?)))
}

/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nzf_group_free(a: *mut NzfGroup) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nzf_group_order(a: *const NzfGroup) -> u32 {
    a.as_ref().map_or(0, |a| a.0.order())
}

/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nzf_flow_free(f: *mut NzfFlow) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Tail vertex and value index of edge `e`.
///
/// # Safety
/// `f` must be a live handle; `tail` and `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_flow_edge(
    f: *const NzfFlow,
    e: usize,
    tail: *mut usize,
    value: *mut u32,
) -> NzfStatus {
    guard(|| {
        let f = &borrow(f)?.0;
        if e >= f.values.len() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                m: f.values.len(),
            }
            .into());
        }
        if tail.is_null() || value.is_null() {
            return Err(Fail::Arg("null output pointer"));
        }
        *tail = f.orientation.tail(e);
        *value = f.values[e].index();
        Ok(())
    })
}

/// The flow in the `flow <group>` text format; free with
/// [`nzf_string_free`].
///
/// # Safety
/// `f` must be a live handle; `dst` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_flow_to_text(f: *const NzfFlow, dst: *mut *mut c_char) -> NzfStatus {
    guard(|| {
        let s = io::format_flow(&borrow(f)?.0);
        if dst.is_null() {
            return Err(Fail::Arg("null output pointer"));
        }
        *dst = CString::new(s).expect("no interior nul").into_raw();
        Ok(())
    })
}

/// Parse a flow for `g` from the `flow <group>` text format.
///
/// # Safety
/// `g` must be a live handle, `src` nul-terminated, `flow` writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_flow_parse(
    g: *const NzfGraph,
    src: *const c_char,
    flow: *mut *mut NzfFlow,
) -> NzfStatus {
    guard(|| out(flow, NzfFlow(io::parse_flow(text(src)?, &borrow(g)?.0)?)))
}

/// Set `valid` and `nowhere_zero` to 0 or 1.
///
/// # Safety
/// Handles must be live; output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_verify(
    g: *const NzfGraph,
    f: *const NzfFlow,
    valid: *mut i32,
    nowhere_zero: *mut i32,
) -> NzfStatus {
    guard(|| {
        let check = verify_flow(&borrow(g)?.0, &borrow(f)?.0)?;
        if valid.is_null() || nowhere_zero.is_null() {
            return Err(Fail::Arg("null output pointer"));
        }
        *valid = check.valid as i32;
        *nowhere_zero = check.nowhere_zero as i32;
        Ok(())
    })
}

/// Search for a nowhere-zero flow. Returns `NZF_STATUS_NO_FLOW` when none
/// exists; `candidates` (optional) receives the number of coordinate
/// vectors examined, saturated to 64 bits.
///
/// # Safety
/// Handles must be live; `flow` writable; `candidates` null or writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_search(
    g: *const NzfGraph,
    a: *const NzfGroup,
    flow: *mut *mut NzfFlow,
    candidates: *mut u64,
) -> NzfStatus {
    guard(|| {
        let (g, a) = (&borrow(g)?.0, &borrow(a)?.0);
        let outcome = search_nowhere_zero(g, a)?;
        if !candidates.is_null() {
            *candidates = u64::try_from(outcome.candidates()).unwrap_or(u64::MAX);
        }
        match outcome {
            SearchOutcome::Found { flow: f, .. } => out(flow, NzfFlow(f)),
            SearchOutcome::NoneExists { candidates } => Err(Error::NoFlow {
                what: "graph".into(),
                group: a.descriptor(),
                candidates,
            }
            .into()),
        }
    })
}

/// Number of flows (zeros allowed); fails if it exceeds 64 bits.
///
/// # Safety
/// Handles must be live; `count` writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_count(
    g: *const NzfGraph,
    a: *const NzfGroup,
    count: *mut u64,
) -> NzfStatus {
    guard(|| {
        let c = count_flows(&borrow(g)?.0, &borrow(a)?.0, 0)?.count;
        if count.is_null() {
            return Err(Fail::Arg("null output pointer"));
        }
        *count = u64::try_from(c).map_err(|_| Error::CountOverflow)?;
        Ok(())
    })
}

/// Glue two sides sharing at most `q - 2` edges over a field of order `q`.
/// Side flows are searched for.
///
/// # Safety
/// Handles must be live; id arrays must hold `n1`/`n2` values; `flow`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_glue(
    g: *const NzfGraph,
    a: *const NzfGroup,
    s1: *const usize,
    n1: usize,
    s2: *const usize,
    n2: usize,
    flow: *mut *mut NzfFlow,
) -> NzfStatus {
    guard(|| {
        let g = &borrow(g)?.0;
        let inst = GlueInstance {
            graph: g.clone(),
            sides: [edge_set(g, s1, n1)?, edge_set(g, s2, n2)?],
            flows: [None, None],
            group: borrow(a)?.0.clone(),
        };
        out(flow, NzfFlow(glue_common(&inst)?.flow))
    })
}

/// A 4-flow on the union of two sides sharing at most three edges, three
/// of them connected.
///
/// # Safety
/// As [`nzf_glue`].
#[no_mangle]
pub unsafe extern "C" fn nzf_glue_four(
    g: *const NzfGraph,
    s1: *const usize,
    n1: usize,
    s2: *const usize,
    n2: usize,
    flow: *mut *mut NzfFlow,
) -> NzfStatus {
    guard(|| {
        let g = &borrow(g)?.0;
        let (a, b) = (edge_set(g, s1, n1)?, edge_set(g, s2, n2)?);
        out(flow, NzfFlow(glue_four(g, &a, &b, [None, None])?.flow))
    })
}

/// A 4-flow for a graph whose every edge lies on a cycle of length at
/// most 4.
///
/// # Safety
/// `g` must be a live handle; `flow` writable.
#[no_mangle]
pub unsafe extern "C" fn nzf_cover4(g: *const NzfGraph, flow: *mut *mut NzfFlow) -> NzfStatus {
    guard(|| out(flow, NzfFlow(cover4(&borrow(g)?.0)?.flow)))
}

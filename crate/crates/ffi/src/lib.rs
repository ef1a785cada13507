//! C interface to the `geodetic` crate.
//!
//! Graphs and result sets are opaque heap handles released with their `_free`
//! function. Fallible calls return a [`GeodeticStatus`] and write results
//! through out-pointers, which are left untouched on failure; the message
//! for the most recent failure on the calling thread is available from
//! [`geodetic_last_error`]. Strings returned to the caller are freed with
//! [`geodetic_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use geodetic::constructions::{self, Cut};
use geodetic::search::SearchOptions;
use geodetic::{graph6, Error, Graph};

/// Largest order a graph may have.
pub const GEODETIC_MAX_VERTICES: usize = 32;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodeticStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapacityExceeded = 3,
    NotGeodetic = 4,
    InvalidCut = 5,
    Parse = 6,
    Overflow = 7,
    Panic = 8,
}

/// A simple undirected graph.
pub struct GeodeticGraph(Graph);

/// Graphs returned by an enumeration, in canonical order.
pub struct GeodeticGraphSet(Vec<Graph>);

/// Invariants of a connected graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct GeodeticReport {
    pub order: usize,
    pub radius: usize,
    pub diameter: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub is_hamiltonian: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> GeodeticStatus {
    match e {
        Error::CapacityExceeded { .. } => GeodeticStatus::CapacityExceeded,
        Error::NotGeodetic { .. } => GeodeticStatus::NotGeodetic,
        Error::InvalidCut(_) => GeodeticStatus::InvalidCut,
        Error::Graph6(_) => GeodeticStatus::Parse,
        _ => GeodeticStatus::InvalidArgument,
    }
}

struct Failure(GeodeticStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GeodeticStatus::NullPointer, format!("{what} is null"))
}

/// Run `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GeodeticStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GeodeticStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            GeodeticStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const GeodeticGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut GeodeticGraph, g: Graph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(GeodeticGraph(g))));
    Ok(())
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn geodetic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn geodetic_status_message(status: GeodeticStatus) -> *const c_char {
    let s: &'static CStr = match status {
        GeodeticStatus::Ok => c"ok",
        GeodeticStatus::NullPointer => c"null pointer",
        GeodeticStatus::InvalidArgument => c"invalid argument",
        GeodeticStatus::CapacityExceeded => c"capacity exceeded",
        GeodeticStatus::NotGeodetic => c"graph is not geodetic",
        GeodeticStatus::InvalidCut => c"invalid cut",
        GeodeticStatus::Parse => c"parse error",
        GeodeticStatus::Overflow => c"result does not fit",
        GeodeticStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Empty graph on `n` vertices.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_new(
    n: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, Graph::new(n)?))
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_free(g: *mut GeodeticGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_clone(
    g: *const GeodeticGraph,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, *graph_ref(g)?))
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_order(g: *const GeodeticGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_edge_count(g: *const GeodeticGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_add_edge(
    g: *mut GeodeticGraph,
    u: usize,
    v: usize,
) -> GeodeticStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(|| null("graph"))?;
        g.0.try_add_edge(u, v)?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_has_edge(
    g: *const GeodeticGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> GeodeticStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.order();
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex, n }.into());
        }
        put(out, g.has_edge(u, v))
    })
}

/// Parse one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(GeodeticStatus::Parse, "graph6 text is not ASCII".into()))?;
        put_graph(out, graph6::decode(s.trim_end())?)
    })
}

/// graph6 encoding, to be released with [`geodetic_string_free`].
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_to_graph6(
    g: *const GeodeticGraph,
    out: *mut *mut c_char,
) -> GeodeticStatus {
    guard(|| {
        let s = CString::new(graph6::encode(graph_ref(g)?)).expect("graph6 is ASCII");
        put(out, s.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn geodetic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether every pair of vertices has at most one shortest path. False for null.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_is_geodetic(g: *const GeodeticGraph) -> bool {
    g.as_ref().is_some_and(|g| g.0.is_geodetic())
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_is_connected(g: *const GeodeticGraph) -> bool {
    g.as_ref().is_some_and(|g| g.0.is_connected())
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_is_biconnected(g: *const GeodeticGraph) -> bool {
    g.as_ref().is_some_and(|g| g.0.is_biconnected())
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_report(
    g: *const GeodeticGraph,
    out: *mut GeodeticReport,
) -> GeodeticStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = g.report()?;
        put(
            out,
            GeodeticReport {
                order: r.order,
                radius: r.radius,
                diameter: r.diameter,
                min_degree: r.min_degree,
                max_degree: g.max_degree(),
                is_regular: r.is_regular,
                is_hamiltonian: r.is_hamiltonian,
            },
        )
    })
}

/// The canonically relabeled copy of `g`: isomorphic graphs give equal copies.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_canonical(
    g: *const GeodeticGraph,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| {
        let g = graph_ref(g)?;
        put_graph(out, geodetic::canon::canonical_labeling(g).graph)
    })
}

/// # Safety
/// `a` and `b` must be live graph handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graphs_isomorphic(
    a: *const GeodeticGraph,
    b: *const GeodeticGraph,
    out: *mut bool,
) -> GeodeticStatus {
    guard(|| put(out, geodetic::are_isomorphic(graph_ref(a)?, graph_ref(b)?)))
}

/// Order of the automorphism group. Fails with `OVERFLOW` above 2^64 - 1.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_graph_automorphisms(
    g: *const GeodeticGraph,
    out: *mut u64,
) -> GeodeticStatus {
    guard(|| {
        let order = geodetic::automorphism_group_order(graph_ref(g)?);
        let order = u64::try_from(order).map_err(|_| {
            Failure(
                GeodeticStatus::Overflow,
                format!("{order} does not fit in 64 bits"),
            )
        })?;
        put(out, order)
    })
}

/// Biconnected geodetic graphs on `n` vertices, optionally only the regular
/// ones. `threads` of 0 means one.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_enumerate(
    n: usize,
    threads: usize,
    regular_only: bool,
    out: *mut *mut GeodeticGraphSet,
) -> GeodeticStatus {
    guard(|| {
        let opts = SearchOptions {
            threads: threads.max(1),
            regular_only,
            ..SearchOptions::default()
        };
        let found = geodetic::enumerate_geodetic(n, &opts)?;
        let set = GeodeticGraphSet(found.graphs.into_values().collect());
        put(out, Box::into_raw(Box::new(set)))
    })
}

/// # Safety
/// `set` must be a live set handle or null.
#[no_mangle]
pub unsafe extern "C" fn geodetic_set_len(set: *const GeodeticGraphSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// A copy of the `i`-th graph of the set.
///
/// # Safety
/// `set` must be a live set handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_set_get(
    set: *const GeodeticGraphSet,
    i: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| {
        let set = set.as_ref().ok_or_else(|| null("set"))?;
        let g = set.0.get(i).ok_or_else(|| {
            Failure(
                GeodeticStatus::InvalidArgument,
                format!("index {i} out of range for {} graphs", set.0.len()),
            )
        })?;
        put_graph(out, *g)
    })
}

/// # Safety
/// `set` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn geodetic_set_free(set: *mut GeodeticGraphSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_complete(
    n: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::complete_graph(n)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_cycle(n: usize, out: *mut *mut GeodeticGraph) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::cycle(n)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_petersen(out: *mut *mut GeodeticGraph) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::petersen()))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_h_graph(
    m: usize,
    n: usize,
    s: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::h_graph(m, n, s)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_big_h_graph(
    m: usize,
    n: usize,
    p: usize,
    s: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::big_h_graph(m, n, p, s)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_f_graph(
    k: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::f_graph(k)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_widespread_petersen(
    t: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::widespread_petersen(t)?))
}

/// Incidence graph of the projective plane of prime order `k`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_projective_plane_graph(
    k: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::projective_plane_graph(k)?))
}

/// Complete graph on `len` vertices with edge `{i, j}` subdivided by
/// `labels[i] + labels[j]` new vertices.
///
/// # Safety
/// `labels` must point to `len` readable values and `out` be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_subdivide_complete(
    labels: *const usize,
    len: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| {
        let labels = slice(labels, len)?;
        put_graph(out, constructions::subdivide_complete(labels)?)
    })
}

/// Every edge subdivided by `t` new vertices; `t` must be even.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_subdivide_uniform(
    g: *const GeodeticGraph,
    t: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| put_graph(out, constructions::subdivide_uniform(graph_ref(g)?, t)?))
}

/// Subdivide each edge of the cut separating `side` from the rest by `k`
/// vertices.
///
/// # Safety
/// `g` must be a live graph handle, `side` must point to `len` readable
/// values and `out` be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn geodetic_subdivide_cut(
    g: *const GeodeticGraph,
    side: *const usize,
    len: usize,
    k: usize,
    out: *mut *mut GeodeticGraph,
) -> GeodeticStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let cut = Cut::new(g.order(), slice(side, len)?)?;
        put_graph(out, constructions::subdivide_cut(g, &cut, k)?)
    })
}

unsafe fn slice<'a>(p: *const usize, len: usize) -> Result<&'a [usize], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null("array"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

// SPDX-License-Identifier: Apache-2.0

//! C ABI for steiner-core.
//!
//! Graphs cross the boundary as opaque `SteinerGraph` handles. Every fallible
//! call returns a `SteinerStatus` and writes results through out-pointers;
//! on failure `steiner_last_error_message` describes the error for the
//! calling thread. Strings returned by the library must be released with
//! `steiner_string_free`, graphs with `steiner_graph_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};

use steiner::characterization::{classify, CharacterizationError};
use steiner::families::{self, Family, FamilyError, FamilyParams};
use steiner::steiner::{self as metrics, SteinerError};
use steiner::{graph6, Graph, GraphError};

/// Outcome of a library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteinerStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Disconnected = 4,
    OutOfRange = 5,
    LimitExceeded = 6,
    ConstraintViolated = 7,
    Panic = 8,
}

/// Graph families accepted by `steiner_family_generate`, in the order of
/// `Family::ALL`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteinerFamily {
    H1 = 0,
    H2 = 1,
    H3 = 2,
    H4 = 3,
    T = 4,
    Delta = 5,
    DeltaPrime = 6,
    G1 = 7,
    G2 = 8,
    G3 = 9,
}

fn family_from_code(code: u32) -> Option<Family> {
    Family::ALL.get(code as usize).copied()
}

/// Opaque graph handle.
pub struct SteinerGraph {
    graph: Graph,
}

/// Verdicts of the `sdiam_4` classifier for one graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SteinerClassification {
    pub n: usize,
    pub min_degree: usize,
    pub sdiam4: usize,
    pub non_cut: usize,
    pub thm2: bool,
    pub thm3: bool,
    pub thm3_condition_i: bool,
    pub thm3_condition_ii: bool,
    /// Which of `H1..H4` span the complement.
    pub spanning: [bool; 4],
    pub lemma1: bool,
    pub consistent: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).expect("nul bytes replaced"));
}

struct Failure(SteinerStatus, String);

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let status = match e {
            GraphError::VertexOutOfRange { .. } => SteinerStatus::OutOfRange,
            GraphError::Disconnected => SteinerStatus::Disconnected,
            GraphError::SelfLoop(_) | GraphError::EdgeList { .. } => SteinerStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<SteinerError> for Failure {
    fn from(e: SteinerError) -> Self {
        let status = match &e {
            SteinerError::Graph(g) => return g.clone().into(),
            SteinerError::EmptyTerminalSet => SteinerStatus::InvalidArgument,
            SteinerError::SubsetSizeOutOfRange { .. } => SteinerStatus::OutOfRange,
            SteinerError::TooManyTerminals { .. }
            | SteinerError::OracleTooLarge { .. }
            | SteinerError::OrderTooLarge(_) => SteinerStatus::LimitExceeded,
        };
        Failure(status, e.to_string())
    }
}

impl From<CharacterizationError> for Failure {
    fn from(e: CharacterizationError) -> Self {
        match e {
            CharacterizationError::Graph(g) => g.into(),
            CharacterizationError::Steiner(s) => s.into(),
            other => Failure(SteinerStatus::OutOfRange, other.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure(SteinerStatus::ConstraintViolated, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SteinerStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SteinerStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SteinerStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SteinerStatus::Panic
        }
    }
}

/// # Safety
/// `g` must be null or a live handle from this library.
unsafe fn graph_ref<'a>(g: *const SteinerGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(graph: Graph) -> *mut SteinerGraph {
    Box::into_raw(Box::new(SteinerGraph { graph }))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries). Duplicate edges collapse.
///
/// # Safety
/// `edges` must be valid for `2 * edge_count` reads (it may be null when
/// `edge_count` is 0) and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SteinerGraph,
) -> SteinerStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let graph = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        write(out, boxed(graph), "out")
    })
}

/// Decodes one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut SteinerGraph,
) -> SteinerStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let line = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(SteinerStatus::ParseError, e.to_string()))?;
        let graph = graph6::decode(line.trim_end())
            .map_err(|e| Failure(SteinerStatus::ParseError, e.to_string()))?;
        write(out, boxed(graph), "out")
    })
}

/// Releases a graph handle; null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn steiner_graph_free(g: *mut SteinerGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_graph_order(g: *const SteinerGraph, out: *mut usize) -> SteinerStatus {
    guard(|| write(out, graph_ref(g)?.order(), "out"))
}

/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_graph_size(g: *const SteinerGraph, out: *mut usize) -> SteinerStatus {
    guard(|| write(out, graph_ref(g)?.size(), "out"))
}

/// Encodes the graph as graph6; release the string with `steiner_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_graph_to_graph6(g: *const SteinerGraph, out: *mut *mut c_char) -> SteinerStatus {
    guard(|| {
        let line = CString::new(graph6::encode(graph_ref(g)?)).expect("graph6 is printable ASCII");
        write(out, line.into_raw(), "out")
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn steiner_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Steiner distance of `count` terminals. `*reachable` is false when the
/// terminals span several components, in which case `*value` is 0.
///
/// # Safety
/// `g` must be a live handle, `terminals` valid for `count` reads, and both
/// out-pointers valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_distance(
    g: *const SteinerGraph,
    terminals: *const usize,
    count: usize,
    value: *mut usize,
    reachable: *mut bool,
) -> SteinerStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if terminals.is_null() && count > 0 {
            return Err(null("terminals"));
        }
        let set: &[usize] = if count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(terminals, count)
        };
        let d = metrics::steiner_distance(graph, set)?.value();
        write(value, d.unwrap_or(0), "value")?;
        write(reachable, d.is_some(), "reachable")
    })
}

/// Steiner `k`-diameter of a connected graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_sdiam(g: *const SteinerGraph, k: usize, out: *mut usize) -> SteinerStatus {
    guard(|| write(out, metrics::steiner_diameter(graph_ref(g)?, k)?, "out"))
}

/// Steiner `k`-radius of a connected graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_srad(g: *const SteinerGraph, k: usize, out: *mut usize) -> SteinerStatus {
    guard(|| write(out, metrics::steiner_profile(graph_ref(g)?, k)?.radius, "out"))
}

/// Steiner Wiener index `SW_k` of a connected graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_wiener(g: *const SteinerGraph, k: usize, out: *mut u64) -> SteinerStatus {
    guard(|| write(out, metrics::steiner_wiener_index(graph_ref(g)?, k)?, "out"))
}

/// Average Steiner distance `mu_k` as a reduced fraction.
///
/// # Safety
/// `g` must be a live handle and both out-pointers valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_average(
    g: *const SteinerGraph,
    k: usize,
    numerator: *mut u64,
    denominator: *mut u64,
) -> SteinerStatus {
    guard(|| {
        let mu = metrics::average_steiner_distance(graph_ref(g)?, k)?;
        write(numerator, *mu.numer(), "numerator")?;
        write(denominator, *mu.denom(), "denominator")
    })
}

/// Classifies a connected graph of order at least 5.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_classify(g: *const SteinerGraph, out: *mut SteinerClassification) -> SteinerStatus {
    guard(|| {
        let r = classify(graph_ref(g)?)?;
        let mut spanning = [false; 4];
        for name in &r.thm3_spanning {
            let i = ["H1", "H2", "H3", "H4"].iter().position(|h| h == name).expect("known name");
            spanning[i] = true;
        }
        let record = SteinerClassification {
            n: r.n,
            min_degree: r.min_degree,
            sdiam4: r.sdiam4,
            non_cut: r.non_cut,
            thm2: r.thm2,
            thm3: r.thm3,
            thm3_condition_i: r.thm3_condition_i,
            thm3_condition_ii: r.thm3_condition_ii,
            spanning,
            lemma1: r.lemma1,
            consistent: r.consistent,
        };
        write(out, record, "out")
    })
}

/// Builds a member of a named family with parameters `a, b, c, d` and order `n`.
/// `family` is a `SteinerFamily` value; other codes give `INVALID_ARGUMENT`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn steiner_family_generate(
    family: u32,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    n: usize,
    out: *mut *mut SteinerGraph,
) -> SteinerStatus {
    guard(|| {
        let family = family_from_code(family).ok_or_else(|| {
            Failure(SteinerStatus::InvalidArgument, format!("unknown family code {family}"))
        })?;
        let graph = families::generate(&FamilyParams::new(family, [a, b, c, d], n))?;
        write(out, boxed(graph), "out")
    })
}

/// Message for the most recent failure on the calling thread, or an empty
/// string. The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn steiner_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn steiner_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

//! C ABI over the `cumulants` library.
//!
//! Every function returns a [`CmStatus`]. On failure a message is stored per
//! thread and can be read with [`cm_last_error`]. Objects handed out as
//! pointers are owned by the caller and released with the matching `*_free`
//! function. Strings returned through `out` parameters are released with
//! [`cm_string_free`]. Rationals cross the boundary as strings `"p/q"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cumulants::algebra::{format_rational, format_rationals, parse_rational, parse_rational_json};
use cumulants::cumulants::{beta, convert_sequence, verify_identity, Basis, IdentityId};
use cumulants::graphs::{anti_interval_graph, crossing_graph, tutte_eval};
use cumulants::partitions::{enumerate, PartitionClass, SetPartition};
use cumulants::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ParseError = 4,
    LimitExceeded = 5,
    UnknownIdentity = 6,
    IdentityFailed = 7,
    Panic = 8,
}

/// Partition classes accepted by [`cm_enumerate_new`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmClass {
    All = 0,
    Noncrossing = 1,
    Interval = 2,
    Irreducible = 3,
    Connected = 4,
    IrreducibleNoncrossing = 5,
    ConnectedNoncrossing = 6,
}

/// Which block graph [`cm_partition_tutte`] evaluates.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmGraph {
    Crossing = 0,
    AntiInterval = 1,
}

/// Membership of a partition in each class.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CmClassFlags {
    pub noncrossing: bool,
    pub interval: bool,
    pub irreducible: bool,
    pub connected: bool,
}

/// Opaque set partition.
pub struct CmPartition(SetPartition);

/// Opaque iterator over an enumerated partition class.
pub struct CmPartitionIter {
    items: std::vec::IntoIter<SetPartition>,
    len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(text).expect("nul bytes removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(CmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => CmStatus::ParseError,
            Error::LimitExceeded { .. } => CmStatus::LimitExceeded,
            Error::UnknownIdentity(_) => CmStatus::UnknownIdentity,
            Error::IdentityFailed { .. } => CmStatus::IdentityFailed,
            _ => CmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CmStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CmStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CmStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn partition<'a>(p: *const CmPartition) -> Result<&'a SetPartition, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("partition"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(CmStatus::InvalidArgument, "interior nul".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn class_of(c: CmClass) -> PartitionClass {
    match c {
        CmClass::All => PartitionClass::All,
        CmClass::Noncrossing => PartitionClass::Noncrossing,
        CmClass::Interval => PartitionClass::Interval,
        CmClass::Irreducible => PartitionClass::Irreducible,
        CmClass::Connected => PartitionClass::Connected,
        CmClass::IrreducibleNoncrossing => PartitionClass::IrreducibleNoncrossing,
        CmClass::ConnectedNoncrossing => PartitionClass::ConnectedNoncrossing,
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn cm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"1,3|2,4"` or a JSON list of blocks.
///
/// # Safety
/// `input` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_parse(input: *const c_char, out: *mut *mut CmPartition) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = SetPartition::parse(text(input, "input")?)?;
        *out = Box::into_raw(Box::new(CmPartition(p)));
        Ok(())
    })
}

/// Releases a partition. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_free(p: *mut CmPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Size of the ground set, or 0 for null.
///
/// # Safety
/// `p` must be null or a live partition.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_n(p: *const CmPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.n())
}

/// Number of blocks, or 0 for null.
///
/// # Safety
/// `p` must be null or a live partition.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_num_blocks(p: *const CmPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.num_blocks())
}

/// Canonical text form, blocks by minimum.
///
/// # Safety
/// `p` must be a live partition and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_to_string(p: *const CmPartition, out: *mut *mut c_char) -> CmStatus {
    guard(|| write_string(out, partition(p)?.to_string()))
}

/// # Safety
/// `p` must be a live partition and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_classify(p: *const CmPartition, out: *mut CmClassFlags) -> CmStatus {
    guard(|| {
        let f = partition(p)?.classify();
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = CmClassFlags {
            noncrossing: f.noncrossing,
            interval: f.interval,
            irreducible: f.irreducible,
            connected: f.connected,
        };
        Ok(())
    })
}

/// Coefficient of `H_π` in the classical cumulant, as a rational string.
///
/// # Safety
/// `p` must be a live partition and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_beta(p: *const CmPartition, out: *mut *mut c_char) -> CmStatus {
    guard(|| write_string(out, format_rational(&beta(partition(p)?)?)))
}

/// Tutte polynomial of a block graph at `(x, y)`, both rational strings.
///
/// # Safety
/// `p` must be a live partition, `x` and `y` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_partition_tutte(
    p: *const CmPartition,
    graph: CmGraph,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> CmStatus {
    guard(|| {
        let pi = partition(p)?;
        let x = parse_rational(text(x, "x")?)?;
        let y = parse_rational(text(y, "y")?)?;
        let g = match graph {
            CmGraph::Crossing => crossing_graph(pi),
            CmGraph::AntiInterval => anti_interval_graph(pi),
        };
        write_string(out, format_rational(&tutte_eval(&g, &x, &y)))
    })
}

/// Enumerates a partition class of `[n]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cm_enumerate_new(n: usize, class: CmClass, out: *mut *mut CmPartitionIter) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let items = enumerate(n, class_of(class))?;
        let len = items.len();
        *out = Box::into_raw(Box::new(CmPartitionIter {
            items: items.into_iter(),
            len,
        }));
        Ok(())
    })
}

/// Total number of partitions the iterator yields, or 0 for null.
///
/// # Safety
/// `it` must be null or a live iterator.
#[no_mangle]
pub unsafe extern "C" fn cm_enumerate_len(it: *const CmPartitionIter) -> usize {
    it.as_ref().map_or(0, |it| it.len)
}

/// Stores the next partition in `out`, or null once exhausted.
///
/// # Safety
/// `it` must be a live iterator and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_enumerate_next(it: *mut CmPartitionIter, out: *mut *mut CmPartition) -> CmStatus {
    guard(|| {
        let it = it.as_mut().ok_or_else(|| null("iterator"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = it
            .items
            .next()
            .map_or(ptr::null_mut(), |p| Box::into_raw(Box::new(CmPartition(p))));
        Ok(())
    })
}

/// Releases an iterator. Null is ignored.
///
/// # Safety
/// `it` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cm_enumerate_free(it: *mut CmPartitionIter) {
    if !it.is_null() {
        drop(Box::from_raw(it));
    }
}

/// Converts a JSON array of rationals between `moments`, `classical`,
/// `free`, `boolean` and `monotone`; the result is a JSON array of strings.
///
/// # Safety
/// The three inputs must be nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_convert(
    from: *const c_char,
    to: *const c_char,
    values_json: *const c_char,
    out: *mut *mut c_char,
) -> CmStatus {
    guard(|| {
        let from: Basis = text(from, "from")?.parse()?;
        let to: Basis = text(to, "to")?.parse()?;
        let values = parse_rational_json(text(values_json, "values")?)?;
        let converted = format_rationals(&convert_sequence(from, to, &values)?);
        let quoted: Vec<String> = converted.iter().map(|s| format!("\"{s}\"")).collect();
        write_string(out, format!("[{}]", quoted.join(",")))
    })
}

/// Checks a catalog identity at order `n`; `holds` receives the verdict.
/// A failing identity still returns `Ok` with `holds = false`.
///
/// # Safety
/// `identity` must be nul-terminated and `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn cm_verify(identity: *const c_char, n: usize, holds: *mut bool) -> CmStatus {
    guard(|| {
        let id: IdentityId = text(identity, "identity")?.parse()?;
        let out = holds.as_mut().ok_or_else(|| null("holds"))?;
        *out = verify_identity(id, n)?.holds;
        Ok(())
    })
}

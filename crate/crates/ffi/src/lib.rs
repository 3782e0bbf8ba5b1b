//! C ABI for hopfrad.
//!
//! A definition file is loaded into an opaque [`HopfradModule`]; queries
//! return JSON documents as NUL-terminated strings owned by the caller and
//! released with [`hopfrad_string_free`]. Every entry point returns a
//! [`HopfradStatus`]; the message of the last failure on the calling thread
//! is available from [`hopfrad_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use hopfrad::cli::{self, DefinitionFile};
use hopfrad::haction::{CheckLevel, HModuleAlgebra};
use hopfrad::hradical::{comparison_report, oracle, Options, DEFAULT_SEED};
use hopfrad::Error;

/// Status codes; the nonzero values match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfradStatus {
    Ok = 0,
    Other = 1,
    ValidationFailed = 2,
    ParseError = 3,
    CapExceeded = 4,
    Contradiction = 5,
    NullArgument = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

/// Seed and enumeration cap. A null pointer selects the defaults.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct HopfradOptions {
    pub seed: u64,
    pub cap: u64,
}

/// A parsed definition together with its H-module algebra.
pub struct HopfradModule {
    def: DefinitionFile,
    m: HModuleAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HopfradStatus {
    match e.exit_code() {
        2 => HopfradStatus::ValidationFailed,
        3 => HopfradStatus::ParseError,
        4 => HopfradStatus::CapExceeded,
        5 => HopfradStatus::Contradiction,
        _ => HopfradStatus::Other,
    }
}

fn fail(status: HopfradStatus, msg: String) -> HopfradStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), HopfradStatus>) -> HopfradStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HopfradStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(HopfradStatus::Panic, "internal panic".into()),
    }
}

fn lift<T>(r: hopfrad::Result<T>) -> Result<T, HopfradStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, HopfradStatus> {
    if p.is_null() {
        return Err(fail(HopfradStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(HopfradStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn module<'a>(p: *const HopfradModule) -> Result<&'a HopfradModule, HopfradStatus> {
    p.as_ref()
        .ok_or_else(|| fail(HopfradStatus::NullArgument, "module is null".into()))
}

unsafe fn options(p: *const HopfradOptions) -> Options {
    match p.as_ref() {
        Some(o) => Options {
            seed: o.seed,
            cap: o.cap as u128,
        },
        None => Options::default(),
    }
}

unsafe fn put_json(out: *mut *mut c_char, value: &serde_json::Value) -> Result<(), HopfradStatus> {
    if out.is_null() {
        return Err(fail(HopfradStatus::NullArgument, "output pointer is null".into()));
    }
    let s = serde_json::to_string(value).expect("serializable");
    *out = CString::new(s).expect("JSON has no NULs").into_raw();
    Ok(())
}

fn build(def: DefinitionFile) -> Result<Box<HopfradModule>, HopfradStatus> {
    let m = def.build().map_err(|e| match e {
        Error::DimensionMismatch { .. } | Error::Precondition(_) => fail(HopfradStatus::ParseError, e.to_string()),
        other => fail(status_of(&other), other.to_string()),
    })?;
    Ok(Box::new(HopfradModule { def, m }))
}

unsafe fn store(out: *mut *mut HopfradModule, m: Box<HopfradModule>) -> Result<(), HopfradStatus> {
    if out.is_null() {
        return Err(fail(HopfradStatus::NullArgument, "output pointer is null".into()));
    }
    *out = Box::into_raw(m);
    Ok(())
}

/// The default seed used when no options are given.
#[no_mangle]
pub extern "C" fn hopfrad_default_seed() -> u64 {
    DEFAULT_SEED
}

/// Message of the last failure on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn hopfrad_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a definition from a JSON string.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_from_json(json: *const c_char, out: *mut *mut HopfradModule) -> HopfradStatus {
    guard(|| {
        let def = lift(DefinitionFile::from_json(text(json, "json")?))?;
        store(out, build(def)?)
    })
}

/// Reads and parses a definition file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_from_file(path: *const c_char, out: *mut *mut HopfradModule) -> HopfradStatus {
    guard(|| {
        let (def, m) = lift(cli::load(Path::new(text(path, "path")?)))?;
        store(out, Box::new(HopfradModule { def, m }))
    })
}

/// Releases a module. Null is ignored.
///
/// # Safety
/// `m` must come from one of the constructors and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_free(m: *mut HopfradModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimensions of `R` and `H`.
///
/// # Safety
/// `m` must be a live module; the output pointers may be null.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_dims(m: *const HopfradModule, dim_r: *mut usize, dim_h: *mut usize) -> HopfradStatus {
    guard(|| {
        let m = module(m)?;
        if let Some(d) = dim_r.as_mut() {
            *d = m.m.dim_r();
        }
        if let Some(d) = dim_h.as_mut() {
            *d = m.m.dim_h();
        }
        Ok(())
    })
}

/// Checks the algebra, Hopf and action axioms at the file's level (or at
/// `level` when it is not null: "weak", "module" or "unital"). Writes the reports
/// as JSON; returns `ValidationFailed` when any axiom fails.
///
/// # Safety
/// `m` must be a live module, `level` null or a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_validate(
    m: *const HopfradModule,
    level: *const c_char,
    out: *mut *mut c_char,
) -> HopfradStatus {
    guard(|| {
        let m = module(m)?;
        let level = if level.is_null() {
            m.def.expected_level
        } else {
            let s = text(level, "level")?;
            serde_json::from_value::<CheckLevel>(serde_json::Value::String(s.into()))
                .map_err(|e| fail(HopfradStatus::ParseError, format!("level: {e}")))?
        };
        let reports = cli::validate_all(&m.m, level);
        let ok = reports.iter().all(|(_, r)| r.is_ok());
        put_json(out, &serde_json::json!({"ok": ok, "reports": cli::validation_value(&reports)}))?;
        if ok {
            Ok(())
        } else {
            Err(fail(HopfradStatus::ValidationFailed, "definition does not validate".into()))
        }
    })
}

/// Computes one radical (`baer`, `jacobson`, `brownmccoy`, `locnil`, `gt`,
/// `fisher:<base>`) or `all`, as JSON.
///
/// # Safety
/// `m` must be a live module, `which` a NUL-terminated string, `opts` null or valid, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_radical(
    m: *const HopfradModule,
    which: *const c_char,
    opts: *const HopfradOptions,
    out: *mut *mut c_char,
) -> HopfradStatus {
    guard(|| {
        let m = module(m)?;
        let which = text(which, "which")?;
        let (value, _) = lift(cli::radical_command(&m.def, &m.m, which, &options(opts)))?;
        put_json(out, &value)
    })
}

/// The full comparison report (entries, checks, observations) as JSON.
///
/// # Safety
/// `m` must be a live module, `opts` null or valid, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_report(
    m: *const HopfradModule,
    opts: *const HopfradOptions,
    out: *mut *mut c_char,
) -> HopfradStatus {
    guard(|| {
        let m = module(m)?;
        let rep = lift(comparison_report(&m.m, &options(opts)))?;
        put_json(out, &serde_json::to_value(&rep).expect("serializable"))
    })
}

/// Brute-force recomputation over a prime field, as JSON. Returns
/// `Contradiction` when the brute and structural routes differ.
///
/// # Safety
/// `m` must be a live module, `opts` null or valid, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_module_oracle(
    m: *const HopfradModule,
    opts: *const HopfradOptions,
    out: *mut *mut c_char,
) -> HopfradStatus {
    guard(|| {
        let m = module(m)?;
        let rep = lift(oracle::oracle(&m.m, &options(opts)))?;
        put_json(out, &serde_json::to_value(&rep).expect("serializable"))?;
        if rep.diffs.is_empty() {
            Ok(())
        } else {
            Err(fail(HopfradStatus::Contradiction, rep.diffs.join("; ")))
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopfrad_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

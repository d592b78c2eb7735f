//! C interface to `qfc_core`.
//!
//! Objects are opaque handles released with their `*_free` function. Every
//! fallible call returns a [`QfcStatus`]; on failure a message is available
//! from [`qfc_last_error`] until the next call on the same thread. Strings
//! returned through `char **` belong to the caller and are released with
//! [`qfc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qfc_core::cli::parse_monoid;
use qfc_core::decide::{self, SubalgebraSpec};
use qfc_core::laurent::CoefficientDomain;
use qfc_core::monoid::FgMonoid;
use qfc_core::numsgp::NumericalSemigroup;
use qfc_core::verdict::{Answer, Verdict};
use qfc_core::verify::{self, Property, Subject, VerdictDocument};
use qfc_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QfcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    BudgetExceeded = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QfcAnswer {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QfcProperty {
    Qfc = 0,
    Pfc = 1,
    Fc = 2,
    Retract = 3,
    Normal = 4,
}

/// A finitely generated submonoid of ℤⁿ.
pub struct QfcMonoid(FgMonoid);

/// A subalgebra of a Laurent polynomial ring over Q or F_p.
pub struct QfcAlgebra {
    spec: SubalgebraSpec,
    texts: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QfcStatus {
    match e {
        Error::Syntax { .. } | Error::MalformedCertificate(_) => QfcStatus::ParseError,
        Error::BudgetExceeded(_) | Error::BoxTooLarge { .. } | Error::Undecided(_) => QfcStatus::BudgetExceeded,
        Error::Overflow(_) => QfcStatus::Internal,
        _ => QfcStatus::InvalidInput,
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), (QfcStatus, String)>) -> QfcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QfcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QfcStatus::Internal
        }
    }
}

fn core(e: Error) -> (QfcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (QfcStatus, String) {
    (QfcStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` is null or a valid nul-terminated string.
unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (QfcStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (QfcStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

fn property(p: QfcProperty) -> Property {
    match p {
        QfcProperty::Qfc => Property::Qfc,
        QfcProperty::Pfc => Property::Pfc,
        QfcProperty::Fc => Property::Fc,
        QfcProperty::Retract => Property::Retract,
        QfcProperty::Normal => Property::Normal,
    }
}

fn answer(v: &Verdict) -> QfcAnswer {
    match v.answer {
        Answer::Yes => QfcAnswer::Yes,
        Answer::No => QfcAnswer::No,
        Answer::Unknown => QfcAnswer::Unknown,
    }
}

/// Writes the answer and, when `json_out` is non-null, the verdict document.
///
/// # Safety
/// `answer_out` is valid; `json_out` is null or valid.
unsafe fn write_verdict(
    doc: VerdictDocument,
    answer_out: *mut QfcAnswer,
    json_out: *mut *mut c_char,
) -> Result<(), (QfcStatus, String)> {
    *answer_out = answer(&doc.verdict);
    if !json_out.is_null() {
        let json = serde_json::to_string(&doc).map_err(|e| (QfcStatus::Internal, e.to_string()))?;
        *json_out = to_c_string(json);
    }
    Ok(())
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn qfc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` is null or was returned through a `char **` out-parameter of this
/// library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qfc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses monoid generators, `(a,b);(c,d)` or `3,5`.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qfc_monoid_parse(text: *const c_char, out: *mut *mut QfcMonoid) -> QfcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let m = parse_monoid(str_arg(text)?, None).map_err(core)?;
        *out = Box::into_raw(Box::new(QfcMonoid(m)));
        Ok(())
    })
}

/// # Safety
/// `m` is null or a handle from [`qfc_monoid_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qfc_monoid_free(m: *mut QfcMonoid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Ambient dimension, or 0 for a null handle.
///
/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qfc_monoid_dimension(m: *const QfcMonoid) -> usize {
    m.as_ref().map_or(0, |m| m.0.ambient())
}

/// Decides `prop` for the monoid algebra R[M].
///
/// # Safety
/// `m` is a live handle; `answer_out` is valid; `json_out` is null or valid.
#[no_mangle]
pub unsafe extern "C" fn qfc_monoid_decide(
    m: *const QfcMonoid,
    prop: QfcProperty,
    answer_out: *mut QfcAnswer,
    json_out: *mut *mut c_char,
) -> QfcStatus {
    guard(|| {
        let (Some(m), false) = (m.as_ref(), answer_out.is_null()) else {
            return Err(null());
        };
        let m = &m.0;
        let p = property(prop);
        let v = match p {
            Property::Qfc => decide::qfc_monoid(m),
            Property::Pfc => decide::pfc_monoid(m),
            Property::Fc => decide::fc_monoid(m),
            Property::Retract => decide::retract_monoid(m),
            Property::Normal => m.is_normal(),
        };
        let subject = Subject::Monoid {
            n: m.ambient(),
            generators: m.generators().to_vec(),
        };
        write_verdict(VerdictDocument::new(subject, p, v), answer_out, json_out)
    })
}

/// Membership test; `coefficients_out`, when non-null, receives a JSON array
/// of nonnegative generator coefficients for members.
///
/// # Safety
/// `m` is a live handle; `point` holds `len` entries; `member_out` is valid;
/// `coefficients_out` is null or valid.
#[no_mangle]
pub unsafe extern "C" fn qfc_monoid_contains(
    m: *const QfcMonoid,
    point: *const i64,
    len: usize,
    member_out: *mut bool,
    coefficients_out: *mut *mut c_char,
) -> QfcStatus {
    guard(|| {
        let (Some(m), false, false) = (m.as_ref(), point.is_null(), member_out.is_null()) else {
            return Err(null());
        };
        let p = qfc_core::lattice::ExponentVector::new(std::slice::from_raw_parts(point, len).to_vec());
        if p.len() != m.0.ambient() {
            return Err(core(Error::DimensionMismatch {
                expected: m.0.ambient(),
                found: p.len(),
            }));
        }
        let c = m.0.contains(&p).map_err(core)?;
        *member_out = c.is_some();
        if let (Some(c), false) = (c, coefficients_out.is_null()) {
            let strings: Vec<String> = c.iter().map(ToString::to_string).collect();
            *coefficients_out = to_c_string(format!("[{}]", strings.join(",")));
        }
        Ok(())
    })
}

/// Parses `"f1; f2; ..."` over `field` (`Q`, `F2`, ...) in `nvars`
/// variables (0 infers the count).
///
/// # Safety
/// `text` and `field` are nul-terminated strings; `out` is valid.
#[no_mangle]
pub unsafe extern "C" fn qfc_algebra_parse(
    text: *const c_char,
    field: *const c_char,
    nvars: usize,
    out: *mut *mut QfcAlgebra,
) -> QfcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let text = str_arg(text)?;
        let domain: CoefficientDomain = qfc_core::cli::parse_field(str_arg(field)?).map_err(core)?;
        let n = if nvars == 0 {
            qfc_core::laurent::infer_nvars(text)
        } else {
            nvars
        };
        let spec = SubalgebraSpec::parse(text, domain, n).map_err(core)?;
        let texts = text.split(';').map(|s| s.trim().to_string()).collect();
        *out = Box::into_raw(Box::new(QfcAlgebra { spec, texts }));
        Ok(())
    })
}

/// # Safety
/// `a` is null or a handle from [`qfc_algebra_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qfc_algebra_free(a: *mut QfcAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Semi-decides qfc, pfc (one variable, or refutation through qfc) or fc.
///
/// # Safety
/// `a` is a live handle; `answer_out` is valid; `json_out` is null or valid.
#[no_mangle]
pub unsafe extern "C" fn qfc_algebra_decide(
    a: *const QfcAlgebra,
    prop: QfcProperty,
    answer_out: *mut QfcAnswer,
    json_out: *mut *mut c_char,
) -> QfcStatus {
    guard(|| {
        let (Some(a), false) = (a.as_ref(), answer_out.is_null()) else {
            return Err(null());
        };
        let spec = &a.spec;
        let p = property(prop);
        let v = match p {
            Property::Qfc => decide::qfc_general(spec).map_err(core)?,
            Property::Fc => decide::fc_general(spec).map_err(core)?,
            Property::Pfc if spec.n == 1 => match decide::one_var_pfc_general(spec) {
                Err(Error::HypothesisUnmet(r)) => Verdict::unknown(format!("hypothesis unmet: {r}")),
                v => v.map_err(core)?,
            },
            Property::Pfc => {
                let q = decide::qfc_general(spec).map_err(core)?;
                if q.is_no() {
                    q
                } else {
                    Verdict::unknown("no pfc criterion known for n >= 2 beyond the monomial cases")
                }
            }
            _ => Verdict::unknown(format!("{p} is decided for monoid algebras only")),
        };
        let subject = Subject::Algebra {
            domain: spec.domain,
            n: spec.n,
            generators: a.texts.clone(),
        };
        write_verdict(VerdictDocument::new(subject, p, v), answer_out, json_out)
    })
}

/// Re-checks a verdict document produced by this library or the `qfc` tool.
///
/// # Safety
/// `json` is a nul-terminated string; `valid_out` is valid.
#[no_mangle]
pub unsafe extern "C" fn qfc_verify_document(json: *const c_char, valid_out: *mut bool) -> QfcStatus {
    guard(|| {
        if valid_out.is_null() {
            return Err(null());
        }
        *valid_out = verify::verify_document(str_arg(json)?).map_err(core)?;
        Ok(())
    })
}

/// Frobenius number of the numerical semigroup generated by `gens`
/// (−1 for ℕ).
///
/// # Safety
/// `gens` holds `len` entries; `out` is valid.
#[no_mangle]
pub unsafe extern "C" fn qfc_frobenius(gens: *const u64, len: usize, out: *mut i64) -> QfcStatus {
    guard(|| {
        if gens.is_null() || out.is_null() {
            return Err(null());
        }
        let s = NumericalSemigroup::from_generators(std::slice::from_raw_parts(gens, len)).map_err(core)?;
        *out = s.frobenius();
        Ok(())
    })
}

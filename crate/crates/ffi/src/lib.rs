//! C ABI for `sympair`.
//!
//! Big integers cross the boundary as opaque [`SympairNatural`] handles,
//! created from decimal strings or `u64` and released with
//! [`sympair_natural_free`]. Every fallible call returns a [`SympairStatus`]
//! and writes results through out-pointers only on success. Strings returned
//! by the library are owned by the caller and released with
//! [`sympair_string_free`].
//!
//! Schemes are selected with the `SYMPAIR_SCHEME_*` constants.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use sympair::{Error, Scheme};

pub const SYMPAIR_SCHEME_CANTOR: u32 = 0;
pub const SYMPAIR_SCHEME_F: u32 = 1;
pub const SYMPAIR_SCHEME_G: u32 = 2;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SympairStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// The scheme constant is not one of `SYMPAIR_SCHEME_*`.
    InvalidScheme = 2,
    /// An argument lies outside the scheme's domain, e.g. 0 for scheme F.
    Domain = 3,
    /// A string was not a plain decimal natural or not valid UTF-8.
    Parse = 4,
    /// A result does not fit in 64 bits.
    Overflow = 5,
    /// Internal failure; indicates a bug in the library.
    Internal = 6,
}

/// Opaque arbitrary-precision natural number.
pub struct SympairNatural {
    value: BigUint,
}

impl SympairNatural {
    fn boxed(value: BigUint) -> *mut SympairNatural {
        Box::into_raw(Box::new(SympairNatural { value }))
    }
}

fn scheme_from(raw: u32) -> Result<Scheme, SympairStatus> {
    match raw {
        SYMPAIR_SCHEME_CANTOR => Ok(Scheme::Cantor),
        SYMPAIR_SCHEME_F => Ok(Scheme::F),
        SYMPAIR_SCHEME_G => Ok(Scheme::G),
        _ => Err(SympairStatus::InvalidScheme),
    }
}

fn status_of(e: &Error) -> SympairStatus {
    match e {
        Error::InverseMismatch(_) | Error::Io(_) => SympairStatus::Internal,
        Error::UnknownScheme(_) => SympairStatus::InvalidScheme,
        _ => SympairStatus::Domain,
    }
}

/// Runs `body`, mapping errors and panics to a status.
fn guard<F>(body: F) -> SympairStatus
where
    F: FnOnce() -> Result<(), SympairStatus>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SympairStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => SympairStatus::Internal,
    }
}

unsafe fn natural_ref<'a>(p: *const SympairNatural) -> Result<&'a BigUint, SympairStatus> {
    // SAFETY: non-null handles come from this library and are live per the caller contract.
    unsafe { p.as_ref() }.map(|n| &n.value).ok_or(SympairStatus::NullPointer)
}

/// Allocates a handle holding `value`. Never returns NULL.
#[no_mangle]
pub extern "C" fn sympair_natural_from_u64(value: u64) -> *mut SympairNatural {
    SympairNatural::boxed(BigUint::from(value))
}

/// Parses a NUL-terminated decimal string (ASCII digits only).
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sympair_natural_from_decimal(
    text: *const c_char,
    out: *mut *mut SympairNatural,
) -> SympairStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(SympairStatus::NullPointer);
        }
        // SAFETY: checked non-null; caller guarantees NUL termination.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| SympairStatus::Parse)?;
        let value = sympair::parse_natural(s).ok_or(SympairStatus::Parse)?;
        // SAFETY: checked non-null.
        unsafe { *out = SympairNatural::boxed(value) };
        Ok(())
    })
}

/// Renders a handle as a decimal string, or NULL if `n` is NULL.
/// Release the result with `sympair_string_free`.
///
/// # Safety
/// `n` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sympair_natural_to_decimal(n: *const SympairNatural) -> *mut c_char {
    match unsafe { natural_ref(n) } {
        Ok(v) => CString::new(v.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `n` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn sympair_natural_to_u64(n: *const SympairNatural, out: *mut u64) -> SympairStatus {
    guard(|| {
        let v = unsafe { natural_ref(n) }?;
        if out.is_null() {
            return Err(SympairStatus::NullPointer);
        }
        let v = v.to_u64().ok_or(SympairStatus::Overflow)?;
        // SAFETY: checked non-null.
        unsafe { *out = v };
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `n` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sympair_natural_free(n: *mut SympairNatural) {
    if !n.is_null() {
        // SAFETY: allocated by `SympairNatural::boxed` and not yet freed.
        drop(unsafe { Box::from_raw(n) });
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sympair_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Pairs `m` and `n` under `scheme`, storing a new handle in `*out`.
///
/// # Safety
/// `m`, `n` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sympair_pair(
    scheme: u32,
    m: *const SympairNatural,
    n: *const SympairNatural,
    out: *mut *mut SympairNatural,
) -> SympairStatus {
    guard(|| {
        let scheme = scheme_from(scheme)?;
        let (m, n) = unsafe { (natural_ref(m)?, natural_ref(n)?) };
        if out.is_null() {
            return Err(SympairStatus::NullPointer);
        }
        let code = sympair::pair(scheme, m, n).map_err(|e| status_of(&e))?;
        // SAFETY: checked non-null.
        unsafe { *out = SympairNatural::boxed(code) };
        Ok(())
    })
}

/// Inverts `code` under `scheme`. Symmetric schemes yield `m >= n`.
///
/// # Safety
/// `code` must be a live handle; `out_m` and `out_n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sympair_unpair(
    scheme: u32,
    code: *const SympairNatural,
    out_m: *mut *mut SympairNatural,
    out_n: *mut *mut SympairNatural,
) -> SympairStatus {
    guard(|| {
        let scheme = scheme_from(scheme)?;
        let code = unsafe { natural_ref(code) }?;
        if out_m.is_null() || out_n.is_null() {
            return Err(SympairStatus::NullPointer);
        }
        let (m, n) = sympair::unpair(scheme, code).map_err(|e| status_of(&e))?;
        // SAFETY: checked non-null.
        unsafe {
            *out_m = SympairNatural::boxed(m);
            *out_n = SympairNatural::boxed(n);
        }
        Ok(())
    })
}

/// Fixed-width variant of `sympair_pair`; fails with `Overflow` when the
/// code exceeds `UINT64_MAX`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sympair_pair_u64(scheme: u32, m: u64, n: u64, out: *mut u64) -> SympairStatus {
    guard(|| {
        let scheme = scheme_from(scheme)?;
        if out.is_null() {
            return Err(SympairStatus::NullPointer);
        }
        let code = sympair::pair(scheme, &BigUint::from(m), &BigUint::from(n))
            .map_err(|e| status_of(&e))?
            .to_u64()
            .ok_or(SympairStatus::Overflow)?;
        // SAFETY: checked non-null.
        unsafe { *out = code };
        Ok(())
    })
}

/// Fixed-width variant of `sympair_unpair`.
///
/// # Safety
/// `out_m` and `out_n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sympair_unpair_u64(
    scheme: u32,
    code: u64,
    out_m: *mut u64,
    out_n: *mut u64,
) -> SympairStatus {
    guard(|| {
        let scheme = scheme_from(scheme)?;
        if out_m.is_null() || out_n.is_null() {
            return Err(SympairStatus::NullPointer);
        }
        let (m, n) = sympair::unpair(scheme, &BigUint::from(code)).map_err(|e| status_of(&e))?;
        let m = m.to_u64().ok_or(SympairStatus::Internal)?;
        let n = n.to_u64().ok_or(SympairStatus::Internal)?;
        // SAFETY: checked non-null.
        unsafe {
            *out_m = m;
            *out_n = n;
        }
        Ok(())
    })
}

/// Static description of a status code. Never NULL; do not free.
#[no_mangle]
pub extern "C" fn sympair_status_message(status: i32) -> *const c_char {
    let msg: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer argument\0",
        2 => b"invalid scheme\0",
        3 => b"argument outside the scheme's domain\0",
        4 => b"not a decimal natural\0",
        5 => b"value does not fit in 64 bits\0",
        6 => b"internal error\0",
        _ => b"unknown status\0",
    };
    msg.as_ptr().cast()
}

//! Left rotation `λ` on projective characteristic sequences and the right
//! rotation `ρ` (with inverse and integer powers) on integer sequences with
//! at most one even entry.
//!
//! Sequences are plain `i64` slices here; `ρ⁻¹` may produce negative
//! entries. Indices in the comments are 1-based as in `(z_1, ..., z_m)`
//! unless the sequence is written `(z_0, ..., z_m)`.

use thiserror::Error;

use crate::charseq::is_projective_char_seq;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("sequence is not a projective characteristic sequence")]
    NotProjective,
    #[error("sequence must have length at least 2")]
    TooShort,
}

pub(crate) fn is_even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// `λ(z_0, ..., z_m)`; shortens the sequence by one exactly when `z_m = 1`.
pub fn lambda_rot(z: &[i64]) -> Result<Vec<i64>, RotationError> {
    if !is_projective_char_seq(z) {
        return Err(RotationError::NotProjective);
    }
    if z.len() < 2 {
        return Err(RotationError::TooShort);
    }
    let (&last, init) = z.split_last().unwrap();
    let mut out = Vec::with_capacity(z.len());
    match last {
        0 => {
            out.push(0);
            out.extend_from_slice(init);
        }
        1 => out.extend_from_slice(init),
        _ => {
            out.push(last - 2);
            out.extend_from_slice(init);
        }
    }
    Ok(out)
}

/// Position (0-based) of the even entry among `z[from..]`, if any.
fn even_from(z: &[i64], from: usize) -> Option<usize> {
    (from..z.len()).find(|&i| is_even(z[i]))
}

/// Right rotation.
pub fn rho(z: &[i64]) -> Vec<i64> {
    if z.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(z.len());
    match even_from(z, 1) {
        None => {
            out.extend_from_slice(&z[1..]);
            out.push(z[0] + 1);
        }
        Some(v) => {
            out.extend_from_slice(&z[1..v]);
            out.push(z[0] + 1);
            out.extend_from_slice(&z[v + 1..]);
            out.push(z[v] + 1);
        }
    }
    out
}

/// Inverse of [`rho`].
pub fn rho_inv(z: &[i64]) -> Vec<i64> {
    let Some((&last, init)) = z.split_last() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(z.len());
    match even_from(init, 0) {
        None => {
            out.push(last - 1);
            out.extend_from_slice(init);
        }
        Some(v) => {
            out.push(init[v] - 1);
            out.extend_from_slice(&init[..v]);
            out.push(last - 1);
            out.extend_from_slice(&init[v + 1..]);
        }
    }
    out
}

/// `ρ^k` for any integer `k`. Since `ρ^{m+1}` adds 2 to every entry and `ρ`
/// commutes with adding an even constant, only `k mod (m+1)` steps are
/// actually performed.
pub fn rho_pow(z: &[i64], k: i64) -> Vec<i64> {
    if z.is_empty() {
        return Vec::new();
    }
    let period = z.len() as i64 + 1;
    let q = k.div_euclid(period);
    let r = k.rem_euclid(period);
    let mut out = z.to_vec();
    for _ in 0..r {
        out = rho(&out);
    }
    for x in &mut out {
        *x += 2 * q;
    }
    out
}

/// `ρ^k` by naive iteration; reference for [`rho_pow`].
pub fn rho_pow_naive(z: &[i64], k: i64) -> Vec<i64> {
    let mut out = z.to_vec();
    for _ in 0..k.unsigned_abs() {
        out = if k > 0 { rho(&out) } else { rho_inv(&out) };
    }
    out
}

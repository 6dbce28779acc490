//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in canonical form: reduced by
//! gcd, denominator positive, zero stored as 0/1. The text form is `p/q`, or
//! just `p` when the denominator is 1 — the same literal syntax `.vi` files
//! use. Floats never enter any decision; the only conversions out of `Rat`
//! are the exact decimal renderer and the lossy `to_f64` used by sampling
//! oracles and table output.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::{Error, Result};

/// Canonical arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// `n/d` as a `Rat`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a `Rat`.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `p`, `-p`, or `p/q` (optional sign on `p`; `q > 0` after reduction).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((_, den)) = s.split_once('/') {
        let d = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
    }
    Rat::from_str(s).map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))
}

/// Parse a whitespace-separated vector of rationals.
pub fn parse_rat_vec(s: &str) -> Result<Vec<Rat>> {
    s.split_whitespace().map(parse_rat).collect()
}

/// Canonical text form: `p/q`, or `p` when the denominator is 1.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Format a vector as space-separated canonical rationals.
pub fn fmt_rat_vec(v: &[Rat]) -> String {
    v.iter().map(fmt_rat).collect::<Vec<_>>().join(" ")
}

/// Exact decimal rendering with `sig` significant digits, round half away
/// from zero. Plain positional notation within a wide exponent window,
/// `digits e exp` scientific notation outside it. Deterministic.
pub fn decimal_string(r: &Rat, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let (num, den) = (a.numer().clone(), a.denom().clone());
    // exponent e with 10^e <= a < 10^(e+1)
    let dn = num.to_string().len() as i64;
    let dd = den.to_string().len() as i64;
    let mut e = dn - dd; // within 1 of the true exponent
    let pow = |k: i64| -> BigInt {
        BigInt::from(10u32).pow(k.unsigned_abs() as u32)
    };
    // a >= 10^e  <=>  num * 10^max(0,-e) >= den * 10^max(0,e)
    let ge_pow10 = |e: i64, num: &BigInt, den: &BigInt| -> bool {
        let lhs = if e < 0 { num * pow(-e) } else { num.clone() };
        let rhs = if e > 0 { den * pow(e) } else { den.clone() };
        lhs >= rhs
    };
    if !ge_pow10(e, &num, &den) {
        e -= 1;
    } else if ge_pow10(e + 1, &num, &den) {
        e += 1;
    }
    debug_assert!(ge_pow10(e, &num, &den) && !ge_pow10(e + 1, &num, &den));
    // scaled = round(a * 10^(sig-1-e)), then digits(scaled) in [sig, sig+1]
    let shift = sig as i64 - 1 - e;
    let (scn, scd) = if shift >= 0 { (num * pow(shift), den) } else { (num, den * pow(-shift)) };
    let (q, rem) = scn.div_rem(&scd);
    let mut scaled = q;
    if &rem * 2 >= scd {
        scaled += 1;
    }
    let mut digits = scaled.to_string();
    let mut e = e;
    if digits.len() > sig {
        // rounding carried into a new leading digit (e.g. 999.6 -> 1000)
        digits.truncate(sig);
        e += 1;
    }
    // trim trailing zeros but keep at least one digit
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }
    let sign = if neg { "-" } else { "" };
    let body = if (-4..=(sig as i64 + 4)).contains(&e) {
        let e = e;
        if e >= 0 {
            let ip = (e + 1) as usize;
            if digits.len() <= ip {
                format!("{}{}", digits, "0".repeat(ip - digits.len()))
            } else {
                format!("{}.{}", &digits[..ip], &digits[ip..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
        }
    } else {
        if digits.len() > 1 {
            format!("{}.{}e{}", &digits[..1], &digits[1..], e)
        } else {
            format!("{}e{}", digits, e)
        }
    };
    format!("{sign}{body}")
}

/// Lossy conversion for reporting and sampling. Exact decision code must not
/// call this. Robust for magnitudes far outside `f64` integer range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    decimal_string(r, 17).parse::<f64>().unwrap_or(f64::NAN)
}

/// Exact dyadic rational equal to the given finite float.
pub fn rat_from_f64(x: f64) -> Result<Rat> {
    Rat::from_float(x).ok_or_else(|| Error::Precondition(format!("non-finite float {x}")))
}

/// `sqrt(r)` when it is rational, else `None`. Requires `r >= 0`.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Round to the nearest multiple of `step` (> 0), ties away from zero.
pub fn round_to_multiple(r: &Rat, step: &Rat) -> Rat {
    let q = r / step;
    let fl = q.floor();
    let frac = &q - &fl;
    let half = rat(1, 2);
    let k = if frac > half || (frac == half && !q.is_negative()) {
        fl + Rat::one()
    } else {
        fl
    };
    k * step
}

/// Scale a rational vector to a primitive integer vector: multiply through by
/// the lcm of denominators, divide by the gcd of numerators. The zero vector
/// maps to itself; the direction (sign) is preserved.
pub fn primitive_scale(v: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// `primitive_scale` back into rationals.
pub fn primitive_rat(v: &[Rat]) -> Vec<Rat> {
    primitive_scale(v).into_iter().map(Rat::from_integer).collect()
}

/// Sign-normalize a primitive vector so its first nonzero entry is positive.
/// Used for objects determined only up to sign (hyperplane normals).
pub fn sign_normalize(v: &mut [BigInt]) {
    for x in v.iter() {
        match x.sign() {
            Sign::Plus => return,
            Sign::Minus => break,
            Sign::NoSign => continue,
        }
    }
    for x in v.iter_mut() {
        *x = -x.clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_text() {
        let r = rat(6, -4);
        assert_eq!(fmt_rat(&r), "-3/2");
        assert_eq!(fmt_rat(&rat(8, 4)), "2");
        assert_eq!(fmt_rat(&rat(0, 7)), "0");
        assert!(rat(1, 3).denom() > &BigInt::zero());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/4", "-3/4", "7", "-7", "0", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(fmt_rat(&parse_rat("4/8").unwrap()), "1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 12), "0.5");
        assert_eq!(decimal_string(&rat(1, 3), 6), "0.333333");
        assert_eq!(decimal_string(&rat(-22, 7), 6), "-3.14286");
        assert_eq!(decimal_string(&rint(1000), 3), "1000");
        assert_eq!(decimal_string(&rat(9996, 10), 3), "1000");
        assert_eq!(decimal_string(&rat(1, 1000000), 3), "0.000001");
        let tiny = Rat::new(BigInt::one(), BigInt::from(10u8).pow(30));
        assert_eq!(decimal_string(&tiny, 3), "1e-30");
    }

    #[test]
    fn f64_conversions() {
        let huge = Rat::from_integer(BigInt::from(10u8).pow(400));
        let x = rat_to_f64(&(Rat::one() / &huge));
        assert!(x >= 0.0 && x < 1e-300);
        assert!(rat_to_f64(&huge).is_finite() || rat_to_f64(&huge) == f64::INFINITY);
        assert_eq!(rat_to_f64(&rat(1, 4)), 0.25);
        assert_eq!(rat_from_f64(0.375).unwrap(), rat(3, 8));
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&Rat::zero()), Some(Rat::zero()));
        assert_eq!(sqrt_exact(&rat(-1, 1)), None);
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![rat(1, 2), rat(-3, 4), Rat::zero()];
        let p = primitive_scale(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::zero()]);
        let mut m = vec![BigInt::zero(), BigInt::from(-2), BigInt::from(4)];
        sign_normalize(&mut m);
        assert_eq!(m, vec![BigInt::zero(), BigInt::from(2), BigInt::from(-4)]);
    }

    #[test]
    fn grid_rounding() {
        let step = rat(1, 4);
        assert_eq!(round_to_multiple(&rat(3, 8), &step), rat(1, 2));
        assert_eq!(round_to_multiple(&rat(-3, 8), &step), rat(-1, 2));
        assert_eq!(round_to_multiple(&rat(1, 5), &step), rat(1, 4));
    }
}

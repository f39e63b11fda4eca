//! Fraction-free polynomial kernel over the Gaussian integers Z[i].
//!
//! Polynomial gcd and resultants over Q(i) are computed here after clearing
//! denominators: pseudo-remainder sequences over Z[i] avoid the per-operation
//! rational normalization that dominates a naive Euclidean algorithm. The
//! resultant follows the classical sub-resultant algorithm, so the returned
//! value is exact (Sylvester convention), not merely correct up to a unit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        Self { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    fn neg(&self) -> Self {
        Self { re: -self.re.clone(), im: -self.im.clone() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division in Z[i]; panics if the quotient is not integral
    /// (the sub-resultant theory guarantees exactness wherever this is used).
    fn exact_div(&self, rhs: &Self) -> Self {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        assert!(!norm.is_zero(), "division by zero Gaussian integer");
        let num = self.mul(&rhs.conj());
        let (qr, rr) = num.re.div_rem(&norm);
        let (qi, ri) = num.im.div_rem(&norm);
        assert!(rr.is_zero() && ri.is_zero(), "inexact Gaussian-integer division");
        Self { re: qr, im: qi }
    }

    fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

type ZiPoly = Vec<GaussInt>; // lowest degree first, no trailing zeros

fn trim(mut p: ZiPoly) -> ZiPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn scale(p: &[GaussInt], c: &GaussInt) -> ZiPoly {
    p.iter().map(|a| a.mul(c)).collect()
}

fn exact_div_scalar(p: &[GaussInt], c: &GaussInt) -> ZiPoly {
    p.iter().map(|a| a.exact_div(c)).collect()
}

/// Pseudo-remainder: returns exactly `lc(b)^{deg a - deg b + 1} * a  mod  b`,
/// including the full normalization when leading terms cancel early.
fn pseudo_rem(a: &[GaussInt], b: &[GaussInt]) -> ZiPoly {
    let db = b.len() - 1;
    let lc_b = b.last().unwrap().clone();
    let mut e = (a.len() - 1) - db + 1;
    let mut rem: ZiPoly = a.to_vec();
    while rem.len() > db {
        let da = rem.len() - 1;
        let lead = rem.last().unwrap().clone();
        // rem <- lc_b * rem - lead * x^{da-db} * b
        for c in rem.iter_mut() {
            *c = c.mul(&lc_b);
        }
        let shift = da - db;
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&lead.mul(bc));
        }
        rem = trim(rem);
        e -= 1;
        if rem.is_empty() {
            break;
        }
    }
    if e > 0 && !rem.is_empty() {
        let f = lc_b.pow(e);
        rem = scale(&rem, &f);
    }
    rem
}

/// Integer content of a Z[i] polynomial: gcd over Z of all real and
/// imaginary parts. Used only to curb coefficient growth in gcd chains.
fn int_content(p: &[GaussInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(&c.re);
        g = g.gcd(&c.im);
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn strip_int_content(p: ZiPoly) -> ZiPoly {
    let g = int_content(&p);
    if g.is_one() {
        return p;
    }
    let gg = GaussInt { re: g, im: BigInt::zero() };
    exact_div_scalar(&p, &gg)
}

/// Divides out the full Z[i] content (gcd of all coefficients), leaving a
/// primitive polynomial up to a unit.
fn strip_gauss_content(p: ZiPoly) -> ZiPoly {
    let mut content = GaussInt::zero();
    for c in &p {
        if c.is_zero() {
            continue;
        }
        content = if content.is_zero() {
            c.clone()
        } else {
            gauss_gcd(&content, c)
        };
        let norm = &content.re * &content.re + &content.im * &content.im;
        if norm.is_one() {
            return p; // content is a unit
        }
    }
    if content.is_zero() {
        return p;
    }
    exact_div_scalar(&p, &content)
}

/// Clears denominators: returns the Z[i] polynomial `L * f` for the least
/// common multiple `L` of all coefficient denominators, together with `L`.
fn clear_denominators(f: &[GaussianRational]) -> (ZiPoly, BigInt) {
    let mut l = BigInt::one();
    for c in f {
        l = l.lcm(c.re.denom());
        l = l.lcm(c.im.denom());
    }
    let p = f
        .iter()
        .map(|c| GaussInt {
            re: c.re.numer() * (&l / c.re.denom()),
            im: c.im.numer() * (&l / c.im.denom()),
        })
        .collect();
    (trim(p), l)
}

/// Monic gcd over Q(i) by Brown's modular algorithm: gcd images over
/// F_{p^2} = F_p[i] for primes p = 3 mod 4, combined by CRT and certified by
/// an exact divisibility test over Z[i]. Both inputs must be nonzero.
pub(crate) fn gcd_qi(f: &[GaussianRational], g: &[GaussianRational]) -> Vec<GaussianRational> {
    let (mut a, _) = clear_denominators(f);
    let (mut b, _) = clear_denominators(g);
    assert!(!a.is_empty() && !b.is_empty());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    a = strip_int_content(a);
    b = strip_int_content(b);
    if b.len() == 1 {
        return vec![GaussianRational::one()];
    }
    let gcd_zi = modular_gcd_zi(&a, &b);
    let lc = gcd_zi.last().unwrap().to_rational();
    let lc_inv = crate::field::Field::inv(&lc).expect("leading coefficient nonzero");
    gcd_zi
        .iter()
        .map(|c| crate::field::Field::mul(&c.to_rational(), &lc_inv))
        .collect()
}

/// Euclidean gcd in Z[i] with rounded division.
fn gauss_gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let norm = &y.re * &y.re + &y.im * &y.im;
        let num = x.mul(&y.conj());
        let q = GaussInt { re: div_round(&num.re, &norm), im: div_round(&num.im, &norm) };
        let r = x.sub(&q.mul(&y));
        x = y;
        y = r;
    }
    x
}

/// Nearest-integer division, ties rounded deterministically toward +inf.
fn div_round(x: &BigInt, y: &BigInt) -> BigInt {
    let two_x: BigInt = x * BigInt::from(2) + y;
    let two_y: BigInt = y * BigInt::from(2);
    two_x.div_floor(&two_y)
}

const FP2_PRIME_BASE: u64 = 1 << 30;

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Deterministic ~30-bit primes congruent to 3 mod 4, cached across calls.
fn fp2_prime(ix: usize) -> u64 {
    use std::sync::Mutex;
    static CACHE: Mutex<Vec<u64>> = Mutex::new(Vec::new());
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= ix {
        let mut p = cache.last().map_or(FP2_PRIME_BASE + 3, |&q| q + 4);
        while !(p % 4 == 3 && is_prime_u64(p)) {
            p += 4;
        }
        cache.push(p);
    }
    cache[ix]
}

type Fp2 = (u64, u64); // re + im*i with i^2 = -1, p = 3 mod 4 keeps it a field

fn fp2_mul(a: Fp2, b: Fp2, p: u64) -> Fp2 {
    let m = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let re = (m(a.0, b.0) + p - m(a.1, b.1) % p) % p;
    let im = (m(a.0, b.1) + m(a.1, b.0)) % p;
    (re, im)
}

fn fp2_sub(a: Fp2, b: Fp2, p: u64) -> Fp2 {
    ((a.0 + p - b.0) % p, (a.1 + p - b.1) % p)
}

fn fp2_inv(a: Fp2, p: u64) -> Fp2 {
    // (re - im i) / (re^2 + im^2)
    let m = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let n = (m(a.0, a.0) + m(a.1, a.1)) % p;
    let n_inv = pow_mod(n, p - 2, p);
    (m(a.0, n_inv), m((p - a.1) % p, n_inv))
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn fp2_is_zero(a: Fp2) -> bool {
    a == (0, 0)
}

fn reduce_fp2(c: &GaussInt, p: u64) -> Fp2 {
    let pb = BigInt::from(p);
    let to = |x: &BigInt| -> u64 {
        use num_integer::Integer as _;
        let r = x.mod_floor(&pb);
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    };
    (to(&c.re), to(&c.im))
}

type Fp2Poly = Vec<Fp2>;

fn fp2_trim(mut f: Fp2Poly) -> Fp2Poly {
    while f.last().map_or(false, |&c| fp2_is_zero(c)) {
        f.pop();
    }
    f
}

fn fp2_poly(f: &[GaussInt], p: u64) -> Fp2Poly {
    fp2_trim(f.iter().map(|c| reduce_fp2(c, p)).collect())
}

fn fp2_rem(f: &[Fp2], g: &[Fp2], p: u64) -> Fp2Poly {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return f.to_vec();
    }
    let lc_inv = fp2_inv(*g.last().unwrap(), p);
    let mut rem = f.to_vec();
    for k in (dg..rem.len()).rev() {
        if fp2_is_zero(rem[k]) {
            continue;
        }
        let q = fp2_mul(rem[k], lc_inv, p);
        let shift = k - dg;
        for (j, &bc) in g.iter().enumerate() {
            rem[shift + j] = fp2_sub(rem[shift + j], fp2_mul(q, bc, p), p);
        }
    }
    rem.truncate(dg);
    fp2_trim(rem)
}

fn fp2_gcd_monic(f: Fp2Poly, g: Fp2Poly, p: u64) -> Fp2Poly {
    let (mut a, mut b) = (f, g);
    while !b.is_empty() {
        let r = fp2_rem(&a, &b, p);
        a = b;
        b = r;
    }
    let lc_inv = fp2_inv(*a.last().unwrap(), p);
    a.iter().map(|&c| fp2_mul(c, lc_inv, p)).collect()
}

/// Primitive gcd of two primitive Z[i] polynomials of degree >= 1.
fn modular_gcd_zi(f: &[GaussInt], g: &[GaussInt]) -> ZiPoly {
    let gamma = gauss_gcd(f.last().unwrap(), g.last().unwrap());
    // coefficients of gamma * monic-gcd are bounded by a Mignotte-style
    // divisor bound; CRT past it certifies the final candidate
    let height = |p: &[GaussInt]| -> u64 {
        p.iter()
            .map(|c| c.re.bits().max(c.im.bits()))
            .max()
            .unwrap_or(1)
    };
    let gamma_bits = gamma.re.bits().max(gamma.im.bits());
    let bound_bits =
        (f.len() as u64).min(g.len() as u64) + height(f).min(height(g)) + gamma_bits + 8;

    let hard_cap = 4 * bound_bits + 256;
    let mut best_deg = usize::MAX;
    let mut residues: Vec<(BigInt, BigInt)> = Vec::new();
    let mut modulus = BigInt::one();
    let mut prev: Option<ZiPoly> = None;
    let mut rounds = 0u32;

    for ix in 0.. {
        let p = fp2_prime(ix);
        if fp2_is_zero(reduce_fp2(f.last().unwrap(), p))
            || fp2_is_zero(reduce_fp2(g.last().unwrap(), p))
        {
            continue;
        }
        let image = fp2_gcd_monic(fp2_poly(f, p), fp2_poly(g, p), p);
        let deg = image.len() - 1;
        if deg == 0 {
            return vec![GaussInt::one()];
        }
        if deg > best_deg {
            continue; // unlucky prime
        }
        if deg < best_deg {
            best_deg = deg;
            residues = vec![(BigInt::zero(), BigInt::zero()); deg + 1];
            modulus = BigInt::one();
            prev = None;
        }
        let gm = reduce_fp2(&gamma, p);
        let scaled: Fp2Poly = image.iter().map(|&c| fp2_mul(c, gm, p)).collect();
        crt_merge(&mut residues, &modulus, &scaled, p);
        modulus *= BigInt::from(p);
        rounds += 1;
        let _ = rounds;

        // raw symmetric lift stabilizes once the modulus clears the true
        // coefficients; certify by divisibility, content-stripping only then
        let candidate = symmetric_lift(&residues, &modulus);
        let stable = prev.as_ref() == Some(&candidate);
        if stable || modulus.bits() > bound_bits {
            // the lift is gamma/lc(P) times the primitive gcd P; the full
            // Z[i] content must go, or the divisibility test would demand
            // divisibility by that cofactor too
            let primitive = strip_gauss_content(trim(candidate.clone()));
            if zi_divides(f, &primitive) && zi_divides(g, &primitive) {
                return primitive;
            }
        }
        prev = Some(candidate);
        if modulus.bits() > hard_cap {
            eprintln!("modular gcd stuck: f = {:?}", f);
            eprintln!("g = {:?}", g);
            eprintln!("best_deg = {best_deg}, bound_bits = {bound_bits}");
            panic!("modular gcd failed to certify within the coefficient bound");
        }
    }
    unreachable!("prime scan is infinite")
}

fn crt_merge(residues: &mut [(BigInt, BigInt)], modulus: &BigInt, image: &[Fp2], p: u64) {
    let pb = BigInt::from(p);
    if modulus.is_one() {
        for (slot, &(re, im)) in residues.iter_mut().zip(image) {
            *slot = (BigInt::from(re), BigInt::from(im));
        }
        return;
    }
    // x = a mod M, x = b mod p  ->  x = a + M * ((b - a) * M^{-1} mod p)
    let m_inv = {
        let m_mod_p = modulus.mod_floor(&pb);
        let (_, digits) = m_mod_p.to_u64_digits();
        pow_mod(digits.first().copied().unwrap_or(0), p - 2, p)
    };
    let lift = |a: &BigInt, b: u64| -> BigInt {
        let a_mod_p = a.mod_floor(&pb);
        let (_, digits) = a_mod_p.to_u64_digits();
        let a_p = digits.first().copied().unwrap_or(0);
        let diff = (b + p - a_p) % p;
        let k = ((diff as u128 * m_inv as u128) % p as u128) as u64;
        a + modulus * BigInt::from(k)
    };
    for (slot, &(re, im)) in residues.iter_mut().zip(image) {
        slot.0 = lift(&slot.0, re);
        slot.1 = lift(&slot.1, im);
    }
}

fn symmetric_lift(residues: &[(BigInt, BigInt)], modulus: &BigInt) -> ZiPoly {
    let half = modulus / 2;
    let lift = |x: &BigInt| -> BigInt {
        if x > &half {
            x - modulus
        } else {
            x.clone()
        }
    };
    residues
        .iter()
        .map(|(re, im)| GaussInt { re: lift(re), im: lift(im) })
        .collect()
}

/// Exact long division in Z[i][x]; fails fast on the first inexact leading
/// step. For primitive divisor `d`, succeeds exactly when `d` divides `f`
/// over Q(i).
fn zi_exact_div(f: &[GaussInt], d: &[GaussInt]) -> Option<ZiPoly> {
    if d.is_empty() || f.len() < d.len() {
        return None;
    }
    let dd = d.len() - 1;
    let lc = d.last().unwrap();
    let lc_norm = &lc.re * &lc.re + &lc.im * &lc.im;
    let mut rem: ZiPoly = f.to_vec();
    let mut quot = vec![GaussInt::zero(); f.len() - d.len() + 1];
    for k in (dd..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let num = rem[k].mul(&lc.conj());
        let (qr, rr) = num.re.div_rem(&lc_norm);
        let (qi, ri) = num.im.div_rem(&lc_norm);
        if !rr.is_zero() || !ri.is_zero() {
            return None; // leading step not integral: no exact quotient
        }
        let q = GaussInt { re: qr, im: qi };
        let shift = k - dd;
        for (j, dc) in d.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&q.mul(dc));
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(quot))
}

fn zi_divides(f: &[GaussInt], d: &[GaussInt]) -> bool {
    zi_exact_div(f, d).is_some()
}

fn zi_derivative(f: &[GaussInt]) -> ZiPoly {
    if f.len() <= 1 {
        return Vec::new();
    }
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                let k = BigInt::from(k);
                GaussInt { re: &c.re * &k, im: &c.im * &k }
            })
            .collect(),
    )
}

/// Root-multiplicity profile of a nonzero polynomial over Q(i), as sorted
/// `(multiplicity, count-of-distinct-roots)` pairs, by the degree sequence
/// of the iterated gcd chain W, gcd(W, W'), gcd(gcd, gcd'), ...
/// Runs entirely in Z[i] through the modular gcd.
pub(crate) fn multiplicity_profile(f: &[GaussianRational]) -> Vec<(u32, u32)> {
    let (w0, _) = clear_denominators(f);
    let mut w = strip_int_content(w0);
    let mut degs: Vec<usize> = vec![w.len() - 1];
    while w.len() > 1 {
        let dw = strip_int_content(zi_derivative(&w));
        debug_assert!(!dw.is_empty());
        w = if w.len() == 2 {
            vec![GaussInt::one()]
        } else {
            modular_gcd_zi(&w, &dw)
        };
        degs.push(w.len() - 1);
    }
    // degs[k] = sum over roots of max(m - k, 0); the difference sequence
    // counts distinct roots of multiplicity > k
    let mut out = Vec::new();
    let kmax = degs.len() - 1;
    for m in 1..=kmax {
        let n_ge_m = degs[m - 1] - degs[m]; // roots with multiplicity >= m
        let n_ge_m1 = if m < kmax { degs[m] - degs[m + 1] } else { 0 };
        let exact = n_ge_m - n_ge_m1;
        if exact > 0 {
            out.push((m as u32, exact as u32));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Exact resultant over Q(i) (Sylvester convention) via the classical
/// sub-resultant algorithm over Z[i]. Both inputs must be nonzero.
pub(crate) fn resultant_qi(f: &[GaussianRational], g: &[GaussianRational]) -> GaussianRational {
    let deg_f = f.len() - 1;
    let deg_g = g.len() - 1;
    let (fi, lf) = clear_denominators(f);
    let (gi, lg) = clear_denominators(g);
    let r = resultant_zi(&fi, &gi);
    // Res(f, g) = Res(L_f f, L_g g) / (L_f^{deg g} * L_g^{deg f})
    let scale = BigRational::new(BigInt::one(), lf.pow(deg_g as u32) * lg.pow(deg_f as u32));
    let s = GaussianRational::new(scale, BigRational::zero());
    crate::field::Field::mul(&r.to_rational(), &s)
}

fn resultant_zi(a0: &[GaussInt], b0: &[GaussInt]) -> GaussInt {
    let mut a = a0.to_vec();
    let mut b = b0.to_vec();
    assert!(!a.is_empty() && !b.is_empty());
    if a.len() == 1 {
        return a[0].pow(b.len() - 1);
    }
    if b.len() == 1 {
        return b[0].pow(a.len() - 1);
    }
    let mut sign_neg = false;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_neg = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    // strip integer content, tracked exactly:
    // Res(cA, B) = c^{deg B} Res(A, B)
    let ca = int_content(&a);
    let cb = int_content(&b);
    let t = GaussInt { re: ca.pow((b.len() - 1) as u32) * cb.pow((a.len() - 1) as u32), im: BigInt::zero() };
    let ca = GaussInt { re: ca, im: BigInt::zero() };
    let cb = GaussInt { re: cb, im: BigInt::zero() };
    a = exact_div_scalar(&a, &ca);
    b = exact_div_scalar(&b, &cb);

    let mut g = GaussInt::one();
    let mut h = GaussInt::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = if r.is_empty() { r } else { exact_div_scalar(&r, &divisor) };
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            // h <- g^delta / h^{delta - 1}, exact by sub-resultant theory
            g.pow(delta).exact_div(&h.pow(delta - 1))
        };
        if b.is_empty() {
            return GaussInt::zero();
        }
        if b.len() == 1 {
            let da = a.len() - 1;
            // h <- lc(B)^{deg A} / h^{deg A - 1}
            let res = b[0].pow(da).exact_div(&h.pow(da.saturating_sub(1)));
            let res = res.mul(&t);
            return if sign_neg { res.neg() } else { res };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::Polynomial;

    fn qp(coeffs: &[i64]) -> Polynomial<GaussianRational> {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    // independent slow-path resultant over the fraction field, used as the
    // cross-check oracle for the Z[i] kernel
    fn resultant_slow(
        f: &Polynomial<GaussianRational>,
        g: &Polynomial<GaussianRational>,
    ) -> GaussianRational {
        fn go(a: &Polynomial<GaussianRational>, b: &Polynomial<GaussianRational>) -> GaussianRational {
            let da = a.degree().unwrap();
            if b.is_zero() {
                return GaussianRational::zero();
            }
            let db = b.degree().unwrap();
            if db == 0 {
                let mut p = GaussianRational::one();
                for _ in 0..da {
                    p = p.mul(b.coeff(0).unwrap());
                }
                return p;
            }
            if da < db {
                let s = go(b, a);
                return if (da * db) % 2 == 1 { s.neg() } else { s };
            }
            let (_, r) = a.div_rem(b).unwrap();
            if r.is_zero() {
                return GaussianRational::zero();
            }
            let dr = r.degree().unwrap();
            let mut acc = go(b, &r);
            if (da * db) % 2 == 1 {
                acc = acc.neg();
            }
            let lcb = b.leading().unwrap();
            for _ in 0..(da - dr) {
                acc = acc.mul(lcb);
            }
            acc
        }
        go(f, g)
    }

    #[test]
    fn kernel_matches_field_resultant_on_samples() {
        let samples = [
            (qp(&[-1, 0, 1]), qp(&[-2, 1])),
            (qp(&[1, 0, 1]), qp(&[-2, 0, 1])),
            (qp(&[3, -1, 0, 2]), qp(&[1, 5, 7])),
            (qp(&[0, 1, 1, 1, 9]), qp(&[2, 0, -3, 1])),
            (qp(&[4, 2]), qp(&[-7, 0, 0, 3])),
        ];
        for (f, g) in &samples {
            assert_eq!(resultant_qi(f.coeffs(), g.coeffs()), resultant_slow(f, g), "{f} vs {g}");
            assert_eq!(
                resultant_qi(g.coeffs(), f.coeffs()),
                resultant_slow(g, f),
                "swapped {g} vs {f}"
            );
        }
    }

    #[test]
    fn kernel_resultant_detects_common_roots() {
        let f = qp(&[-1, 0, 1]); // (x-1)(x+1)
        let g = qp(&[-2, 1, 1]); // (x-1)(x+2)
        assert!(Field::is_zero(&resultant_qi(f.coeffs(), g.coeffs())));
    }

    #[test]
    fn kernel_gcd_with_gaussian_coefficients() {
        // gcd((x - i)(x + 2), (x - i)(x - 3)) = x - i
        let xi = Polynomial::from_coeffs(vec![GaussianRational::i().neg(), GaussianRational::one()]);
        let f = xi.mul(&qp(&[2, 1]));
        let g = xi.mul(&qp(&[-3, 1]));
        assert_eq!(f.gcd(&g).unwrap(), xi);
    }

    #[test]
    fn kernel_gcd_matches_on_rational_inputs() {
        // denominators are cleared internally; result is monic over Q(i)
        let f = qp(&[-2, 0, 2]).scale(&GaussianRational::from_ratio(1, 3));
        let g = qp(&[0, -4, 0, 4]).scale(&GaussianRational::from_ratio(5, 7));
        assert_eq!(f.gcd(&g).unwrap(), qp(&[-1, 0, 1]));
    }
}

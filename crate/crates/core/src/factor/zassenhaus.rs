//! Factorization of squarefree monic integer polynomials: reduction modulo a
//! good prime, Berlekamp, linear Hensel lifting to a Landau–Mignotte height
//! bound, then factor recombination over subsets in increasing cardinality.
//! The reduction prime is scanned upward from 3, skipping primes that lose
//! squarefreeness, so the whole pipeline is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;

pub(crate) type ZPoly = Vec<BigInt>; // lowest degree first, no trailing zeros

pub(crate) fn trim(mut f: ZPoly) -> ZPoly {
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    f
}

pub(crate) fn mul(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

/// Exact division of integer polynomials with monic divisor; `None` when the
/// division leaves a remainder or a non-integer coefficient would appear.
fn div_exact_monic(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    debug_assert!(g.last().map_or(false, |c| c.is_one()));
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let dg = g.len() - 1;
    let mut rem: ZPoly = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    for k in (dg..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = rem[k].clone();
        let shift = k - dg;
        for (j, b) in g.iter().enumerate() {
            rem[shift + j] -= &q * b;
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(quot))
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> modp::PPoly {
    let pb = BigInt::from(p);
    modp::trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.to_u64().expect("residue fits in u64")
            })
            .collect(),
    )
}

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

/// Landau–Mignotte style height bound for monic factors of a monic integer
/// polynomial: `2^n * sqrt(n+1) * H(f)`, rounded up.
fn factor_height_bound(f: &[BigInt]) -> BigInt {
    let n = (f.len() - 1) as u32;
    let height = f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::one);
    let sqrt_np1 = BigInt::from(((f.len() as f64).sqrt().ceil()) as u64 + 1);
    (BigInt::one() << n) * sqrt_np1 * height
}

/// Symmetric representative of `c mod m` in `(-m/2, m/2]`.
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Integer polynomial helpers modulo m.
fn add_poly(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = a.get(k).cloned().unwrap_or_else(BigInt::zero);
        if let Some(bc) = b.get(k) {
            c += bc;
        }
        out.push(c);
    }
    trim(out)
}

fn sub_poly(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = a.get(k).cloned().unwrap_or_else(BigInt::zero);
        if let Some(bc) = b.get(k) {
            c -= bc;
        }
        out.push(c);
    }
    trim(out)
}

fn reduce_poly(f: &[BigInt], m: &BigInt) -> ZPoly {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

/// Division with remainder by a monic divisor, coefficients taken mod m.
fn div_rem_monic_mod(f: &[BigInt], g: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(g.last().map_or(false, |c| c.is_one()));
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return (Vec::new(), f.to_vec());
    }
    let mut rem: ZPoly = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    for k in (dg..rem.len()).rev() {
        let q = rem[k].mod_floor(m);
        if q.is_zero() {
            rem[k] = BigInt::zero();
            continue;
        }
        let shift = k - dg;
        for (j, b) in g.iter().enumerate() {
            let t = (&q * b).mod_floor(m);
            rem[shift + j] = (&rem[shift + j] - t).mod_floor(m);
        }
        quot[shift] = q;
    }
    rem.truncate(dg);
    (trim(quot), trim(rem))
}

/// One quadratic Hensel step, lifting the factorization and its Bezout pair
/// from mod m to mod m^2 (von zur Gathen & Gerhard, Hensel step): inputs
/// satisfy `f = g*h mod m`, `s*g + t*h = 1 mod m`, `g`, `h` monic,
/// `deg s < deg h`, `deg t < deg g`.
struct HenselPair {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

fn hensel_step(f: &[BigInt], pair: &HenselPair, m: &BigInt) -> HenselPair {
    let m2 = m * m;
    let e = reduce_poly(&sub_poly(f, &mul(&pair.g, &pair.h)), &m2);
    let (q, r) = div_rem_monic_mod(&reduce_poly(&mul(&pair.s, &e), &m2), &pair.h, &m2);
    let g_new = reduce_poly(
        &add_poly(&pair.g, &add_poly(&reduce_poly(&mul(&pair.t, &e), &m2), &mul(&q, &pair.g))),
        &m2,
    );
    let h_new = reduce_poly(&add_poly(&pair.h, &r), &m2);
    // lift the Bezout pair
    let b = reduce_poly(
        &sub_poly(
            &add_poly(&mul(&pair.s, &g_new), &mul(&pair.t, &h_new)),
            &[BigInt::one()],
        ),
        &m2,
    );
    let (c, d) = div_rem_monic_mod(&reduce_poly(&mul(&pair.s, &b), &m2), &h_new, &m2);
    let s_new = reduce_poly(&sub_poly(&pair.s, &d), &m2);
    let t_new = reduce_poly(
        &sub_poly(&pair.t, &add_poly(&reduce_poly(&mul(&pair.t, &b), &m2), &mul(&c, &g_new))),
        &m2,
    );
    HenselPair { g: g_new, h: h_new, s: s_new, t: t_new }
}

fn hensel_lift_pair(f: &[BigInt], mut pair: HenselPair, p: u64, target: &BigInt) -> (ZPoly, ZPoly) {
    let mut modulus = BigInt::from(p);
    while &modulus < target {
        pair = hensel_step(f, &pair, &modulus);
        modulus = &modulus * &modulus;
    }
    (pair.g, pair.h)
}

/// Lifts the modular factorization `f = prod(factors) mod p` to `mod p^K`
/// with `p^K >= target`, by recursive bisection into factor pairs.
fn hensel_lift_tree(f: &[BigInt], factors: &[modp::PPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        // f itself is the lift (monic, already exact over Z)
        return vec![f.to_vec()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut gl: modp::PPoly = vec![1];
    for q in left {
        gl = modp::mul(&gl, q, p);
    }
    let mut gr: modp::PPoly = vec![1];
    for q in right {
        gr = modp::mul(&gr, q, p);
    }
    // Bezout for the pair mod p: s*gl + t*gr = 1 with deg s < deg gr,
    // deg t < deg gl
    let (s, t) = xgcd_mod_p(&gl, &gr, p);
    let pair = HenselPair {
        g: gl.iter().map(|&c| BigInt::from(c)).collect(),
        h: gr.iter().map(|&c| BigInt::from(c)).collect(),
        s: s.iter().map(|&c| BigInt::from(c)).collect(),
        t: t.iter().map(|&c| BigInt::from(c)).collect(),
    };
    let (g_lift, h_lift) = hensel_lift_pair(f, pair, p, target);
    let mut out = hensel_lift_tree(&g_lift, left, p, target);
    out.extend(hensel_lift_tree(&h_lift, right, p, target));
    out
}

/// Extended gcd mod p for coprime (squarefree split) inputs:
/// returns (sg, sh) with sg*g + sh*h = 1 mod p.
fn xgcd_mod_p(g: &[u64], h: &[u64], p: u64) -> (modp::PPoly, modp::PPoly) {
    let (mut r0, mut r1) = (g.to_vec(), h.to_vec());
    let (mut s0, mut s1): (modp::PPoly, modp::PPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (modp::PPoly, modp::PPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = modp::div_rem(&r0, &r1, p);
        let s = sub_mod_p(&s0, &modp::mul(&q, &s1, p), p);
        let t = sub_mod_p(&t0, &modp::mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.len(), 1, "hensel pair inputs must be coprime mod p");
    let inv = modp::inv_mod(r0[0], p);
    let scale = |v: &[u64]| -> modp::PPoly {
        v.iter().map(|&c| ((c as u128 * inv as u128) % p as u128) as u64).collect()
    };
    (scale(&s0), scale(&t0))
}

fn sub_mod_p(a: &[u64], b: &[u64], p: u64) -> modp::PPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = *a.get(k).unwrap_or(&0);
        let y = *b.get(k).unwrap_or(&0);
        out[k] = if x >= y { x - y } else { x + p - y };
    }
    modp::trim(out)
}

/// Factor a squarefree monic integer polynomial into monic irreducible
/// integer factors (unordered; the caller sorts canonically).
pub(crate) fn factor_squarefree_monic(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    debug_assert!(f.last().map_or(false, |c| c.is_one()));
    if n <= 1 {
        return vec![f.to_vec()];
    }

    // choose among the first three usable primes the one with the fewest
    // modular factors (ties to the smaller prime)
    let mut best: Option<(u64, Vec<modp::PPoly>)> = None;
    let mut usable = 0;
    let mut p = 3u64;
    while usable < 3 {
        if is_prime_u64(p) {
            let fp = reduce_mod_p(f, p);
            if fp.len() == f.len() {
                let d = modp::derivative(&fp, p);
                if !d.is_empty() && modp::gcd(&fp, &d, p).len() == 1 {
                    let factors = modp::berlekamp(&fp, p);
                    usable += 1;
                    let better = match &best {
                        None => true,
                        Some((_, bf)) => factors.len() < bf.len(),
                    };
                    if better {
                        best = Some((p, factors));
                    }
                    if best.as_ref().map(|(_, bf)| bf.len()) == Some(1) {
                        break;
                    }
                }
            }
        }
        p += 2;
    }
    let (p, modular) = best.expect("a usable prime always exists for a squarefree polynomial");
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    let bound = factor_height_bound(f);
    let target = bound * 2 + 1;
    let lifted = hensel_lift_tree(f, &modular, p, &target);
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus *= p;
    }

    recombine(f.to_vec(), lifted, &modulus)
}

/// Subset recombination: tries products of lifted factors in increasing
/// subset size; every accepted product is verified by exact division over Z.
fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= lifted.len() {
        let mut progress = false;
        let indices: Vec<usize> = (0..lifted.len()).collect();
        for combo in combinations(&indices, size) {
            let mut prod: ZPoly = vec![BigInt::one()];
            for &i in &combo {
                prod = mul_mod(&prod, &lifted[i], modulus);
            }
            let candidate = trim(prod.iter().map(|c| symmetric(c, modulus)).collect());
            if candidate.last().map_or(true, |c| !c.is_one()) {
                continue;
            }
            if let Some(q) = div_exact_monic(&f, &candidate) {
                found.push(candidate);
                f = q;
                let mut keep = Vec::new();
                for (i, g) in lifted.drain(..).enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                lifted = keep;
                progress = true;
                break;
            }
        }
        if !progress {
            size += 1;
        }
        if f.len() <= 1 {
            break;
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}

fn mul_mod(f: &[BigInt], g: &[BigInt], m: &BigInt) -> ZPoly {
    trim(mul(f, g).into_iter().map(|c| c.mod_floor(m)).collect())
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, combo: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if combo.len() == k {
            out.push(combo.clone());
            return;
        }
        for i in start..items.len() {
            combo.push(items[i]);
            go(items, k, i + 1, combo, out);
            combo.pop();
        }
    }
    go(items, k, 0, &mut combo, &mut out);
    out
}

//! Dense polynomial arithmetic over F_p for word-sized odd primes, plus
//! Berlekamp's factorization algorithm. Everything here is deterministic:
//! the equal-degree splitting scans field elements in increasing order.

pub(crate) type PPoly = Vec<u64>; // lowest degree first, no trailing zeros

pub(crate) fn trim(mut f: PPoly) -> PPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^{p-2} mod p
    pow_mod_scalar(a, p - 2, p)
}

fn pow_mod_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn mul(f: &[u64], g: &[u64], p: u64) -> PPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(a, b, p), p);
        }
    }
    trim(out)
}

/// Division with remainder; divisor must be nonzero.
pub(crate) fn div_rem(f: &[u64], g: &[u64], p: u64) -> (PPoly, PPoly) {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return (Vec::new(), f.to_vec());
    }
    let lc_inv = inv_mod(*g.last().unwrap(), p);
    let mut rem: PPoly = f.to_vec();
    let mut quot = vec![0u64; f.len() - g.len() + 1];
    for k in (dg..rem.len()).rev() {
        if rem[k] == 0 {
            continue;
        }
        let q = mulm(rem[k], lc_inv, p);
        let shift = k - dg;
        for (j, &b) in g.iter().enumerate() {
            rem[shift + j] = subm(rem[shift + j], mulm(q, b, p), p);
        }
        quot[shift] = q;
    }
    rem.truncate(dg);
    (trim(quot), trim(rem))
}

pub(crate) fn rem(f: &[u64], g: &[u64], p: u64) -> PPoly {
    div_rem(f, g, p).1
}

pub(crate) fn monic(f: &[u64], p: u64) -> PPoly {
    match f.last() {
        None | Some(1) => f.to_vec(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            f.iter().map(|&c| mulm(c, inv, p)).collect()
        }
    }
}

pub(crate) fn gcd(f: &[u64], g: &[u64], p: u64) -> PPoly {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub(crate) fn derivative(f: &[u64], p: u64) -> PPoly {
    if f.len() <= 1 {
        return Vec::new();
    }
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mulm(c, (k as u64) % p, p))
            .collect(),
    )
}

/// x^e mod f, by square-and-multiply on polynomials.
fn x_pow_mod(e: u64, f: &[u64], p: u64) -> PPoly {
    let mut result = vec![1u64];
    let mut base = rem(&[0, 1], f, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &base, p), f, p);
        }
        base = rem(&mul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}

/// Berlekamp factorization of a squarefree monic polynomial over F_p.
/// Returns the monic irreducible factors in a deterministic order.
pub(crate) fn berlekamp(f: &[u64], p: u64) -> Vec<PPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // rows of Q: coefficients of x^{ip} mod f
    let xp = x_pow_mod(p, f, p);
    let mut rows: Vec<PPoly> = Vec::with_capacity(n);
    let mut cur: PPoly = vec![1];
    rows.push(cur.clone());
    for _ in 1..n {
        cur = rem(&mul(&cur, &xp, p), f, p);
        rows.push(cur.clone());
    }
    // v with v(x)^p = v(x) mod f  <=>  v (Q - I) = 0; build (Q - I)^T and
    // compute its nullspace
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let mut entry = *row.get(j).unwrap_or(&0);
            if i == j {
                entry = subm(entry, 1, p);
            }
            m[j][i] = entry; // transpose
        }
    }
    let basis = nullspace(m, p);
    let k = basis.len(); // number of irreducible factors
    let mut factors: Vec<PPoly> = vec![monic(f, p)];
    'outer: for v in &basis {
        if factors.len() == k {
            break;
        }
        let vp = trim(v.clone());
        if vp.len() <= 1 {
            continue; // constant vector gives no splits
        }
        for s in 0..p {
            let mut next = Vec::with_capacity(factors.len());
            let mut vs = vp.clone();
            vs[0] = subm(vs[0], s, p);
            let vs = trim(vs);
            for g in factors.drain(..) {
                if g.len() - 1 <= 1 {
                    next.push(g);
                    continue;
                }
                let d = gcd(&g, &vs, p);
                if d.len() > 1 && d.len() < g.len() {
                    let (q, r) = div_rem(&g, &d, p);
                    debug_assert!(r.is_empty());
                    next.push(monic(&q, p));
                    next.push(d);
                } else {
                    next.push(g);
                }
            }
            factors = next;
            if factors.len() == k {
                break 'outer;
            }
        }
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}

/// Nullspace basis of a square matrix over F_p (row-major).
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let mut pivot = None;
        for r in row..n {
            if m[r][col] != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        m.swap(row, pr);
        let inv = inv_mod(m[row][col], p);
        for c in 0..n {
            m[row][c] = mulm(m[row][c], inv, p);
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..n {
                    let t = mulm(factor, m[row][c], p);
                    m[r][c] = subm(m[r][c], t, p);
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let is_pivot = |c: usize| pivot_cols.contains(&c);
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            // pivot var = -sum(free contributions)
            let coeff = m[r][free];
            if coeff != 0 {
                v[pc] = subm(0, coeff, p);
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_product_of_linears() {
        // (x-1)(x-2)(x-3) mod 7 = x^3 + 5x^2 + 4x + 1... compute directly
        let p = 7;
        let f = mul(&mul(&[6, 1], &[5, 1], p), &[4, 1], p);
        let factors = berlekamp(&f, p);
        assert_eq!(factors.len(), 3);
        let mut prod = vec![1u64];
        for g in &factors {
            prod = mul(&prod, g, p);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn berlekamp_keeps_irreducible_whole() {
        // x^2 + 1 is irreducible mod 7 (since -1 is not a QR mod 7)
        let factors = berlekamp(&[1, 0, 1], 7);
        assert_eq!(factors, vec![vec![1, 0, 1]]);
    }

    #[test]
    fn berlekamp_mixed_degrees() {
        // (x^2 + 1)(x + 3) mod 7
        let p = 7;
        let f = mul(&[1, 0, 1], &[3, 1], p);
        let factors = berlekamp(&f, p);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&vec![3, 1]));
        assert!(factors.contains(&vec![1, 0, 1]));
    }
}

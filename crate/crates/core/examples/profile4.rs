use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepcurve_core::poly::interpolate;
use sepcurve_core::sampling::*;
use sepcurve_core::*;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut f = None;
    for i in 0..=7 {
        let g = random_rational_function(&mut rng, 8).unwrap();
        if i == 7 {
            f = Some(g);
        }
    }
    let f = f.unwrap();
    println!("deg {}", f.degree());

    let n = f.degree() as usize;
    let dnum = f.num().derivative();
    let dden = f.den().derivative();
    let m = dnum.degree().unwrap_or(0).max(dden.degree().unwrap_or(0));
    let t = Instant::now();
    let mut pts = Vec::new();
    let mut k = 0i64;
    while pts.len() < n + m + 1 {
        let c = GaussianRational::from_int(k);
        k += 1;
        let fc = f.num().sub(&f.den().scale(&c));
        let gc = dnum.sub(&dden.scale(&c));
        if fc.degree() != Some(n) || gc.is_zero() || gc.degree() != Some(m) {
            continue;
        }
        pts.push((c.clone(), fc.resultant(&gc).unwrap()));
    }
    let disc = interpolate(&pts).unwrap();
    println!("disc: {:?} (deg {:?})", t.elapsed(), disc.degree());

    let t = Instant::now();
    let sf = disc.squarefree_part().unwrap();
    println!("squarefree part: {:?} (deg {:?})", t.elapsed(), sf.degree());

    let t = Instant::now();
    let factors = factor::factor_over_qi(&sf).unwrap();
    println!(
        "factor over Qi: {:?} ({:?})",
        t.elapsed(),
        factors.iter().map(|(p, _)| p.degree()).collect::<Vec<_>>()
    );

    for (fac, _) in &factors {
        let d = fac.degree().unwrap_or(0);
        if d >= 2 {
            let t = Instant::now();
            let mut acc: Polynomial<GaussianRational> = Polynomial::zero();
            for kk in (0..=d).rev() {
                acc = acc.mul(f.num());
                if let Some(c) = fac.coeff(kk) {
                    if !c.is_zero() {
                        let mut term = Polynomial::constant(c.clone());
                        for _ in 0..(d - kk) {
                            term = term.mul(f.den());
                        }
                        acc = acc.add(&term);
                    }
                }
            }
            println!("build phi deg {:?}: {:?}", acc.degree(), t.elapsed());
            let t = Instant::now();
            let prof = acc.multiplicity_profile().unwrap();
            println!("phi profile {:?}: {:?}", prof, t.elapsed());
        }
    }
}

use sepcurve_core::poly::interpolate;
use sepcurve_core::*;

fn q(p: i64, den: i64) -> GaussianRational {
    GaussianRational::from_ratio(p, den)
}

fn qi(rp: i64, rq: i64, ip: i64, iq: i64) -> GaussianRational {
    GaussianRational::from_parts(rp, rq, ip, iq)
}

fn main() {
    // the failing case from the seeded sweep
    let num = Polynomial::from_coeffs(vec![
        q(4, 7),
        q(-8, 7),
        q(-5, 7),
        q(-8, 7),
        qi(-1, 7, -1, 7),
    ]);
    let den = Polynomial::from_coeffs(vec![
        q(1, 7),
        q(-3, 7),
        qi(-1, 7, 3, 7),
        q(-6, 7),
        q(1, 1),
    ]);
    let f = RationalFunction::new(num, den).unwrap();
    println!("f deg {}", f.degree());

    // rebuild the discriminant in c by interpolation, as the portrait does
    let n = f.degree() as usize;
    let dnum = f.num().derivative();
    let dden = f.den().derivative();
    let m = dnum.degree().unwrap_or(0).max(dden.degree().unwrap_or(0));
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
    println!("disc degree {:?}", disc.degree());
    println!("computing squarefree part...");
    let sf = disc.squarefree_part().unwrap();
    println!("sf degree {:?}", sf.degree());
    let factors = factor::factor_over_qi(&sf).unwrap();
    println!("factors: {:?}", factors.iter().map(|(p, m)| (p.degree(), m)).collect::<Vec<_>>());
    for (fac, _) in &factors {
        if fac.degree().unwrap_or(0) >= 2 {
            println!("profile for class of degree {:?}...", fac.degree());
            // phi = den^d * fac(num/den) computed through the public fiber API
            let d = fac.degree().unwrap();
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
            println!("phi degree {:?}", acc.degree());
            let prof = acc.multiplicity_profile().unwrap();
            println!("profile {:?}", prof);
        }
    }
}

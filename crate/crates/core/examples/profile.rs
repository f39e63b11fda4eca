use std::time::Instant;
use sepcurve_core::*;

fn main() {
    let a = klein::quartic_basis();
    let f = klein::galois_cover();
    let r = klein::series_generator_r();

    let t = Instant::now();
    let pa = ramification_portrait(&a).unwrap();
    println!("portrait A (deg 4): {:?}", t.elapsed());

    let t = Instant::now();
    let pf = ramification_portrait(&f).unwrap();
    println!("portrait f (deg 24): {:?}", t.elapsed());
    let _ = (pa, pf);

    let t = Instant::now();
    let of = orbifolds_of_function(&f).unwrap();
    println!("orbifolds f: {:?}", t.elapsed());
    let _ = of;

    let t = Instant::now();
    let rr = r.compose(&r).unwrap();
    println!("R o R compose: {:?}", t.elapsed());

    let t = Instant::now();
    let prr = ramification_portrait(&rr).unwrap();
    println!("portrait R o R (deg 25): {:?}", t.elapsed());
    let _ = prr;

    let t = Instant::now();
    let cert = generate_series(&a, &r, 2, 64).unwrap();
    println!("generate_series k=2: {:?}", t.elapsed());
    let _ = cert;
}

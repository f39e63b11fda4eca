use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepcurve_core::sampling::*;
use sepcurve_core::*;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for i in 0..12 {
        let f = random_rational_function(&mut rng, 6).unwrap();
        let t = Instant::now();
        let p = ramification_portrait(&f);
        let el = t.elapsed();
        match p {
            Ok(p) => println!(
                "case {i}: deg {} portrait in {:?} ({} classes, class degrees {:?})",
                f.degree(),
                el,
                p.classes.len(),
                p.classes.iter().map(|c| c.class_degree()).collect::<Vec<_>>()
            ),
            Err(e) => println!("case {i}: deg {} ERR {e} in {:?}", f.degree(), el),
        }
        let t = Instant::now();
        let o = orbifolds_of_function(&f);
        println!("   orbifolds: {:?} ok={}", t.elapsed(), o.is_ok());
    }
}

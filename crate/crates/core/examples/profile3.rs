use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepcurve_core::sampling::*;
use sepcurve_core::*;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut total = std::time::Duration::ZERO;
    for i in 0..50 {
        let f = random_rational_function(&mut rng, 8).unwrap();
        let t = Instant::now();
        let p = ramification_portrait(&f).unwrap();
        let el = t.elapsed();
        total += el;
        if el.as_millis() > 220 {
            println!(
                "case {i}: deg {} in {:?}, classes {:?}",
                f.degree(),
                el,
                p.classes.iter().map(|c| c.class_degree()).collect::<Vec<_>>()
            );
        }
    }
    println!("total: {:?}", total);
}

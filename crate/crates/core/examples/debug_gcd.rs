use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepcurve_core::sampling::*;
use sepcurve_core::*;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for i in 0..50 {
        let f = random_rational_function(&mut rng, 8).unwrap();
        println!("case {i}: deg {} f = {}", f.degree(), f);
        let p = std::panic::catch_unwind(|| ramification_portrait(&f));
        match p {
            Ok(Ok(_)) => println!("   ok"),
            Ok(Err(e)) => println!("   err {e}"),
            Err(_) => {
                println!("   PANIC");
                break;
            }
        }
    }
}

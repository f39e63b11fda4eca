use num_bigint::BigInt;
use num_rational::BigRational;
use sepcurve_core::*;

fn gr(re: i128, im: i128) -> GaussianRational {
    GaussianRational::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

fn main() {
    let f = Polynomial::from_coeffs(vec![
        gr(5965948198912, 0),
        gr(-73779458748416, 0),
        gr(547383889499648, 0),
        gr(-2048909511158528, 0),
        gr(5330012723697952, 0),
        gr(-7847186971993120, 0),
        gr(7022125759839648, 0),
        gr(-4109085429164896, 0),
        gr(1625887784779324, 0),
        gr(-433556664946800, 0),
        gr(74722905942912, 0),
        gr(-7508266916652, 0),
        gr(333419948865, 0),
    ]);
    let g = Polynomial::from_coeffs(vec![
        gr(-1942547968, 24547650944),
        gr(25600771584, -64257301472),
        gr(-746471673856, 210095786488),
        gr(1880620438000, 1425894880720),
        gr(-2337295115954, -1556725422818),
        gr(1300843820864, 523377366558),
        gr(-320314990857, -56506908669),
        gr(28814069655, 0),
    ]);
    // generic Euclid over the fraction field (independent route)
    let mut a = f.monic().unwrap();
    let mut b = g.monic().unwrap();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).unwrap();
        a = b;
        b = if r.is_zero() { r } else { r.monic().unwrap() };
    }
    println!("true monic gcd degree {:?}", a.degree());
    println!("gcd = {}", a);
}

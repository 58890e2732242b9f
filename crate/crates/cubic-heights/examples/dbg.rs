use cubic_heights::roots::*;
use cubic_heights::poly::IntPoly;
use num_bigint::BigInt;
fn ip(cs: &[i64]) -> IntPoly { IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect()) }
fn main() {
    let roots = RealRoots::isolate(&ip(&[1, 0, 0, 1])).unwrap();
    for r in &roots.roots { println!("root in [{}, {}] mult {}", r.lo, r.hi, r.multiplicity); }
    println!("rational roots of (3z-1)(z+2)(z-5): {:?}",
        rational_roots(&ip(&[10, -31, -8, 3])).unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let mut roots = RealRoots::isolate(&ip(&[12, -37, 0, 1])).unwrap();
    for i in 0..roots.roots.len() { roots.refine_to_width(i, &cubic_heights::arith::rat(1,64)); }
    for r in &roots.roots { println!("refined [{}, {}]", r.lo, r.hi); }
}

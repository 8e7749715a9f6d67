use std::time::Instant;
use orbitsep_core::coeff::{plethysm, Cache};
use orbitsep_core::partition::Partition;

#[test]
#[ignore]
fn time_m4_advisory() {
    let cache = Cache::new();
    let nu: Partition = "16,8,8,8".parse().unwrap();
    let t = Instant::now();
    let a = plethysm(&cache, &nu, 10, 4).unwrap();
    println!("a_(16,8,8,8)(10,4) = {a} in {:?}", t.elapsed());
    let t = Instant::now();
    let b = plethysm(&cache, &nu, 4, 10).unwrap();
    println!("a_(16,8,8,8)(4,10) = {b} in {:?}", t.elapsed());
}

#[test]
#[ignore]
fn time_m6_upper() {
    let cache = Cache::new();
    let nu: Partition = "24,12,12,12,12,12".parse().unwrap();
    let t = Instant::now();
    let a = plethysm(&cache, &nu, 6, 14).unwrap();
    println!("a_(24,12^5)(6,14) = {a} in {:?}", t.elapsed());
}

// Rebuilds the δ table from the engine and compares with the stored copy.

use ppspace::gvfp::stable_gd;
use ppspace::manifold::DELTA;
use ppspace::HopfMultiple;

fn main() {
    println!("n1 | 1 2 3 4 5 6 7 8   (engine)");
    let mut agree = true;
    for n1 in 0..8u32 {
        let row: Vec<u64> = (1..=8i64)
            .map(|c| match n1 {
                0 => 0,
                _ => n1 as u64 - stable_gd(HopfMultiple::new(-c, n1).unwrap()).unwrap().lower,
            })
            .collect();
        agree &= row
            .iter()
            .zip(DELTA[n1 as usize])
            .all(|(a, b)| *a == b as u64);
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        println!(" {n1} | {}", cells.join(" "));
    }
    println!("matches stored table: {agree}");
}

use link_algebra::{ground_state, normalization_z, BoundaryMode};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let l: usize = args[1].parse().unwrap();
    let mode = if args.get(2).map(|s| s.as_str()) == Some("two") {
        BoundaryMode::Two
    } else {
        BoundaryMode::One
    };
    let t = Instant::now();
    if mode == BoundaryMode::One {
        let z = normalization_z(l, mode).unwrap();
        println!(
            "one-boundary L={l}: {:?}  Z(1)={}",
            t.elapsed(),
            z.eval(&[(exact_core::Var::A, exact_core::rat(1))]).unwrap()
        );
    } else {
        let gs = ground_state(l, mode).unwrap();
        println!("two-boundary L={l}: {:?} dim={}", t.elapsed(), gs.basis().len());
    }
}

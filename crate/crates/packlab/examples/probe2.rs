use std::time::Instant;

use packlab::graph::Graph;
use packlab::{brute_force_oracle, compute_invariant, Budget, InvariantKind};

// Small deterministic xorshift so the probe needs no external crates.
struct Rng(u64);
impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_connected(rng: &mut Rng, n: usize, extra_permille: u64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n as u32 {
        let pick = rng.below(v as u64) as u32;
        edges.push((pick, v));
    }
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.below(1000) < extra_permille {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn main() {
    let mut rng = Rng(0x9e3779b97f4a7c15);
    let mut worst = std::time::Duration::ZERO;
    let t0 = Instant::now();
    let mut total_checks = 0u64;
    for i in 0..120 {
        let n = 4 + (i % 9);
        let density = 150 + rng.below(300);
        let g = random_connected(&mut rng, n, density);
        for kind in InvariantKind::ALL {
            let t = Instant::now();
            let oracle = match brute_force_oracle(&g, kind) {
                Ok(v) => v,
                Err(_) => continue, // isolated vertices cannot occur here
            };
            let solver = compute_invariant(&g, kind, &Budget::UNLIMITED)
                .unwrap()
                .value()
                .unwrap();
            assert_eq!(oracle, solver, "mismatch kind={kind:?} n={n} i={i}");
            worst = worst.max(t.elapsed());
            total_checks += 1;
        }
    }
    println!(
        "120 graphs x 5 kinds: {} checks, total {:?}, worst single {:?}",
        total_checks,
        t0.elapsed(),
        worst
    );
}

use std::time::Instant;

use packlab::injective::find_partition_into_packings;
use packlab::product::{chained_c5, direct_product, prism};
use packlab::{
    compute_invariant, hypercube, Budget, InvariantKind, PackingKind,
};

fn timed(label: &str, f: impl FnOnce() -> String) {
    let t = Instant::now();
    let out = f();
    println!("{label}: {out}  [{:?}]", t.elapsed());
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(String::as_str).unwrap_or("fast");

    if which == "fast" || which == "all" {
        for n in 1..=6 {
            let q = hypercube(n).unwrap().graph;
            timed(&format!("rho2(Q{n})"), || {
                let r = compute_invariant(&q, InvariantKind::TwoPacking, &Budget::UNLIMITED).unwrap();
                format!("{:?} nodes={}", r.value(), r.nodes)
            });
            timed(&format!("rho_o(Q{n})"), || {
                let r = compute_invariant(&q, InvariantKind::OpenPacking, &Budget::UNLIMITED).unwrap();
                format!("{:?} nodes={}", r.value(), r.nodes)
            });
        }
        let q5 = hypercube(5).unwrap().graph;
        timed("gamma(Q5)", || {
            let r = compute_invariant(&q5, InvariantKind::Domination, &Budget::UNLIMITED).unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
        timed("gamma_t(Q5)", || {
            let r = compute_invariant(&q5, InvariantKind::TotalDomination, &Budget::UNLIMITED).unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
        timed("partition Q5 two-packings size 4", || {
            let r = find_partition_into_packings(&q5, PackingKind::TwoPacking, 4, &Budget::UNLIMITED);
            format!("{:?}", r.map(|s| s.found().map(|p| p.class_count())))
        });
        let q6 = hypercube(6).unwrap().graph;
        timed("partition Q6 two-packings size 8", || {
            let r = find_partition_into_packings(&q6, PackingKind::TwoPacking, 8, &Budget::UNLIMITED);
            format!("{:?}", r.map(|s| s.found().map(|p| p.class_count())))
        });
        timed("rho_o(prism(G1)) exact", || {
            let host = prism(&chained_c5(1).unwrap());
            let r = compute_invariant(&host.graph, InvariantKind::OpenPacking, &Budget::UNLIMITED)
                .unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
    }

    if which == "q7" || which == "all" {
        let q7 = hypercube(7).unwrap().graph;
        timed("rho2(Q7)", || {
            let r = compute_invariant(&q7, InvariantKind::TwoPacking, &Budget::UNLIMITED).unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
        timed("rho_o(Q7)", || {
            let r = compute_invariant(&q7, InvariantKind::OpenPacking, &Budget::UNLIMITED).unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
    }

    if which == "q8" || which == "all" {
        let q8 = hypercube(8).unwrap().graph;
        timed("rho_o(Q8)", || {
            let r = compute_invariant(&q8, InvariantKind::OpenPacking, &Budget::time_ms(60_000))
                .unwrap();
            format!("{:?}/{:?} status={:?} nodes={}", r.lower, r.upper, r.status, r.nodes)
        });
    }

    if which == "g2" || which == "all" {
        let host = prism(&chained_c5(2).unwrap());
        timed("rho_o(prism(G2)) exact", || {
            let r = compute_invariant(&host.graph, InvariantKind::OpenPacking, &Budget::UNLIMITED)
                .unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
    }

    if which == "dom6" || which == "all" {
        let q6 = hypercube(6).unwrap().graph;
        timed("gamma(Q6)", || {
            let r = compute_invariant(&q6, InvariantKind::Domination, &Budget::time_ms(400_000))
                .unwrap();
            format!("{:?}/{:?} status={:?} nodes={}", r.lower, r.upper, r.status, r.nodes)
        });
        timed("gamma_t(Q6)", || {
            let r =
                compute_invariant(&q6, InvariantKind::TotalDomination, &Budget::time_ms(400_000))
                    .unwrap();
            format!("{:?}/{:?} status={:?} nodes={}", r.lower, r.upper, r.status, r.nodes)
        });
    }

    if which == "direct" || which == "all" {
        let q4 = hypercube(4).unwrap().graph;
        let k2 = packlab::graph::complete(2);
        let p = direct_product(&q4, &k2).unwrap();
        timed("gamma_t(Q4xK2)", || {
            let r = compute_invariant(&p.graph, InvariantKind::TotalDomination, &Budget::UNLIMITED)
                .unwrap();
            format!("{:?} nodes={}", r.value(), r.nodes)
        });
    }
}

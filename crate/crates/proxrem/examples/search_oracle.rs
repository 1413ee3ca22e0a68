// Independent re-derivation of the canonical sequences.
//
// maximize_g knows nothing about the closed constructions: it branch-and-
// bounds over all sequences satisfying a family's window constraints. When
// the search is exhaustive and optima_count is 1, the construction is not
// just optimal but uniquely so.

use proxrem::extremal::{construct_x, construct_z};
use proxrem::search::{maximize_g, SearchBudget};
use proxrem::{ConstraintFamily, FamilyKind};

fn main() {
    let budget = SearchBudget::default();

    for (kind, n, delta) in [
        (FamilyKind::A, 18u64, 3u64),
        (FamilyKind::A, 22, 3),
        (FamilyKind::C, 16, 3),
        (FamilyKind::C, 21, 3),
    ] {
        let fam = ConstraintFamily::new(kind, n, delta).unwrap();
        let r = maximize_g(&fam, &budget);
        let best = r.best_seq.as_ref().unwrap();
        println!(
            "family {kind} n={n} delta={delta}: g* = {}, {} optimum(s), {} nodes{}",
            r.best_g.unwrap(),
            r.optima_count,
            r.nodes,
            if r.exhaustive { "" } else { " (truncated)" },
        );
        let canonical = match kind {
            FamilyKind::A => construct_x(n, delta).unwrap(),
            FamilyKind::C => construct_z(n, delta).unwrap(),
            _ => unreachable!(),
        };
        assert_eq!(best.entries(), canonical.entries());
        println!("  search argmax == closed construction: {:?}", best.entries());
    }

    // Budgets make truncation explicit instead of silently wrong.
    let fam = ConstraintFamily::new(FamilyKind::A, 30, 3).unwrap();
    let tight = SearchBudget {
        max_nodes: Some(50),
        ..SearchBudget::default()
    };
    let r = maximize_g(&fam, &tight);
    println!(
        "\nn=30 with a 50-node budget: exhaustive = {}, incumbent g = {:?}",
        r.exhaustive, r.best_g
    );
    let r = maximize_g(&fam, &budget);
    println!("n=30 unbudgeted:          exhaustive = {}, g* = {:?}", r.exhaustive, r.best_g);
}

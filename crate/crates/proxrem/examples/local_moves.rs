// Local optimality of the center constructions.
//
// A single-unit move takes one vertex out of slot i and puts it in slot j
// (possibly one past the end). shift_local_opt enumerates every move that
// keeps the family constraints satisfied and reports any that beat g.

use proxrem::extremal::construct_y;
use proxrem::search::shift_local_opt;
use proxrem::{ConstraintFamily, FamilyKind};

fn main() {
    let n = 68;
    let y = construct_y(n, 4).unwrap().seq;
    let fam = ConstraintFamily::new(FamilyKind::B, n, 4).unwrap();

    let report = shift_local_opt(&y, &fam).unwrap();
    println!("Y_68_4 = {:?}", y.entries());
    println!(
        "g = {}, {} feasible moves, {} beating, locally optimal: {}",
        report.base_g,
        report.moves_feasible,
        report.beating.len(),
        report.locally_optimal
    );

    // Degrade the sequence by hand: pull a unit back from the last slot.
    let worse = y.shifted(y.last_index(), 11).unwrap();
    let report = shift_local_opt(&worse, &fam).unwrap();
    println!("\nafter moving one unit from slot {} to slot 11:", y.last_index());
    println!(
        "g = {}, beating moves: {:?}",
        report.base_g,
        report
            .beating
            .iter()
            .map(|m| format!("{} -> {} (g {})", m.from, m.to, m.g))
            .collect::<Vec<_>>()
    );
    assert!(!report.locally_optimal);

    // Feeding a sequence that violates the family is an error, not a silent
    // pass: family B pins n_0 = 1.
    let bad = proxrem::DistSeq::new(vec![2, 2, 2]).unwrap();
    println!("\nlocalopt on an infeasible input: {}", shift_local_opt(&bad, &fam).unwrap_err());
}

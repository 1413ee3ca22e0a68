// Exact distance invariants on a few familiar graphs.
//
// Proximity pi is the smallest average distance from any vertex, remoteness
// rho the largest; both are exact rationals here, never floats.

use proxrem::Graph;

fn petersen() -> Graph {
    // Kneser graph K(5,2): vertices are the 2-subsets of {0..4}, adjacent
    // when disjoint.
    let subsets: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::new(subsets.len());
    for (i, &(a, b)) in subsets.iter().enumerate() {
        for (j, &(c, d)) in subsets.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn main() {
    let rows: Vec<(&str, Graph)> = vec![
        ("P_8 (path)", Graph::path(8)),
        ("C_8 (cycle)", Graph::cycle(8)),
        ("K_5", Graph::complete(5)),
        ("K_3_3", Graph::complete_bipartite(3, 3)),
        ("Petersen", petersen()),
    ];

    println!(
        "{:<12} {:>3} {:>3} {:>6} {:>5} {:>9} {:>9}  tf  c4f",
        "graph", "n", "m", "delta", "rad", "pi", "rho"
    );
    for (name, g) in rows {
        println!(
            "{:<12} {:>3} {:>3} {:>6} {:>5} {:>9} {:>9}  {}  {}",
            name,
            g.order(),
            g.edge_count(),
            g.min_degree(),
            g.radius().unwrap(),
            g.proximity().unwrap().to_string(),
            g.remoteness().unwrap().to_string(),
            g.is_triangle_free(),
            g.is_c4_free(),
        );
    }

    // Per-vertex view of the path: the ends are remote, the middle is close.
    let p = Graph::path(8);
    println!("\nP_8 average distance by vertex:");
    for v in 0..p.order() {
        println!("  sigma_bar({v}) = {}", p.avg_distance(v).unwrap());
    }
}

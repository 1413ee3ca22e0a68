// Relatedness with respect to a distance-preserving spanning tree.
//
// Root a BFS tree at a center vertex v0. Two vertices are related when both
// their root paths reach depth >= 9 and some pair of such deep ancestors
// lies within graph distance 4. unrelated_witness scans the vertices at
// distance >= ecc(v0) - 9 for one UNrelated to the deepest vertex; the
// structural lemma this encodes says such a witness always exists, so None
// is a loud falsification, never an "ok".

use proxrem::extremal::construct_x;
use proxrem::layered::layered_join;
use proxrem::Graph;

fn main() {
    // A long path: everything is laid out on one line, so the witness is
    // easy to see by hand.
    let p = Graph::path(40);
    let v0 = p.center_vertices().unwrap()[0];
    let w = p.unrelated_witness(v0).unwrap();
    println!("P_40, center {v0}: unrelated witness {w:?}");

    let c = Graph::cycle(50);
    let v0 = c.center_vertices().unwrap()[0];
    println!("C_50, center {v0}: unrelated witness {:?}", c.unrelated_witness(v0).unwrap());

    // A deep extremal layered join.
    let gx = layered_join(&construct_x(60, 3).unwrap()).unwrap();
    let v0 = gx.center_vertices().unwrap()[0];
    let d = gx.bfs(v0).unwrap();
    let ecc = d.max_finite();
    let w = gx.unrelated_witness(v0).unwrap();
    println!("G(X_60_3), center {v0} with eccentricity {ecc}: unrelated witness {w:?}");

    // Shallow graphs have no depth-9 vertices at all, so every pair is
    // unrelated and the witness is immediate.
    let k = Graph::complete_bipartite(4, 4);
    let v0 = k.center_vertices().unwrap()[0];
    println!("K_4_4, center {v0}: unrelated witness {:?}", k.unrelated_witness(v0).unwrap());

    // Relatedness itself, spelled out on the long path.
    let tree = p.bfs_tree(20).unwrap();
    println!(
        "\nP_40 rooted at 20: related(0, 39) = {}, related(35, 39) = {}",
        p.related(&tree, 0, 39),
        p.related(&tree, 35, 39)
    );
}

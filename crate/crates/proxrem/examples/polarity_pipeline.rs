// The C4-free pipeline: H_q -> H_q' -> G_k_q.
//
// H_q is the polarity graph of the projective plane over GF(q): points as
// vertices, x adjacent to y when x is on the polar line of y. It is C4-free
// with q^2+q+1 vertices. Deleting a self-orthogonal point z and a perfect
// matching between its neighbors' other neighborhoods gives H_q', and
// chaining k copies of H_q' gives G_k_q, the C4-free graph whose proximity
// and remoteness track the extremal rates.

use proxrem::polarity::{chain_graph, polarity_graph, pruned_polarity};

fn main() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let p = polarity_graph(q).unwrap();
        let g = &p.graph;
        println!(
            "H_{q}: n = {} = q^2+q+1, m = {}, degrees {}..{}, C4-free {}, {} self-orthogonal points",
            g.order(),
            g.edge_count(),
            g.min_degree(),
            g.degrees().iter().max().unwrap(),
            g.is_c4_free(),
            p.self_orth.len(),
        );
    }

    println!();
    for q in [3u64, 4, 5] {
        let p = pruned_polarity(q).unwrap();
        println!(
            "H_{q}': n = {}, min degree {}, removed a {}-edge matching, connected {}, d(u,v) = {:?}",
            p.graph.order(),
            p.graph.min_degree(),
            p.matching.len(),
            p.connected,
            p.graph.bfs(p.u).unwrap().dist[p.v],
        );
    }
    // q = 2 is the degenerate case: the same pruning disconnects the 7-point
    // plane, so it never feeds the chain.
    let p2 = pruned_polarity(2).unwrap();
    println!("H_2': connected {}", p2.connected);

    println!();
    for k in [1u64, 2, 4, 8] {
        let c = chain_graph(k, 5).unwrap();
        let g = &c.graph;
        let n = g.order() as f64;
        let pi: f64 = {
            let r = g.proximity().unwrap();
            *r.numer() as f64 / *r.denom() as f64
        };
        let rho: f64 = {
            let r = g.remoteness().unwrap();
            *r.numer() as f64 / *r.denom() as f64
        };
        // delta* = 13 at delta = 4; the extremal rates are (5/2)n/13ish for
        // rho and half that for pi. The chain stays within a constant of
        // both while being C4-free with min degree 4.
        println!(
            "G_{k}_5: n = {:>3}, delta = {}, C4-free {}, pi = {:.3}, rho = {:.3}, n/12 = {:.3}",
            g.order(),
            g.min_degree(),
            g.is_c4_free(),
            pi,
            rho,
            n / 12.0,
        );
    }
}

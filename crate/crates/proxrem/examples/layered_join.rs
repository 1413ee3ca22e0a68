// From sequence to graph: the layered join.
//
// G(X) places n_i vertices in layer i and joins consecutive layers
// completely. The result is triangle-free, realizes X as the distance-degree
// sequence of the layer-0 vertex, and its remoteness attains the
// sequence-certified bound g(X)/(n-1) exactly.

use proxrem::bounds::Rational;
use proxrem::extremal::construct_x;
use proxrem::layered::{layer_starts, layered_join};

fn main() {
    let x = construct_x(18, 3).unwrap();
    let g = layered_join(&x).unwrap();
    let starts = layer_starts(&x);

    println!("X_18_3 = {:?}", x.entries());
    println!("G(X) has n = {}, m = {}, min degree {}", g.order(), g.edge_count(), g.min_degree());
    println!("triangle-free: {}, C4-free: {}", g.is_triangle_free(), g.is_c4_free());

    println!("\nlayer  size  sigma(v) for v in layer");
    for (i, &x_i) in x.entries().iter().enumerate() {
        let v = starts[i];
        println!("{:>5} {:>5} {:>8}", i, x_i, g.total_distance(v).unwrap());
    }

    let rho = g.remoteness().unwrap();
    let cert = Rational::new(x.g() as i64, g.order() as i64 - 1);
    println!("\nremoteness = {rho} = g(X)/(n-1) = {cert}");
    assert_eq!(rho, cert);

    // The layer-0 vertex really has X as its BFS transcript.
    assert_eq!(g.distance_degree(0).unwrap().entries(), x.entries());
    println!("distance_degree(layer-0 vertex) == X");
}

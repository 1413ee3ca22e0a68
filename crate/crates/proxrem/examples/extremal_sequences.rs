// The four canonical distance-degree sequences.
//
// X maximizes g = sum i*n_i over the triangle-free any-vertex family, Y over
// the triangle-free center-vertex family, Z and W over the C4-free
// analogues. g/(n-1) is the sequence-certified bound on remoteness (X, Z)
// or proximity (Y, W).

use proxrem::bounds::Rational;
use proxrem::extremal::{construct_w, construct_x, construct_y, construct_z};

fn show(name: &str, entries: &[u64], n: u64) {
    let g: u64 = entries.iter().enumerate().map(|(i, &x)| i as u64 * x).sum();
    let cert = Rational::new(g as i64, n as i64 - 1);
    let body = entries
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    println!("{name:<10} {body}");
    println!("{:<10} g = {g}, certified bound {cert}", "");
}

fn main() {
    show("X_18_3", construct_x(18, 3).unwrap().entries(), 18);
    show("X_24_4", construct_x(24, 4).unwrap().entries(), 24);

    let y = construct_y(68, 4).unwrap();
    println!(
        "\nY_68_4 p = {}, tail n_r = {} (adjustment {:+})",
        y.p, y.n_r, y.p_adjustment
    );
    show("Y_68_4", y.seq.entries(), 68);

    println!();
    show("Z_16_3", construct_z(16, 3).unwrap().entries(), 16);
    show("Z_30_4", construct_z(30, 4).unwrap().entries(), 30);

    let w = construct_w(104, 4).unwrap();
    println!(
        "\nW_104_4 p = {}, tail n_r = {} (adjustment {:+})",
        w.p, w.n_r, w.p_adjustment
    );
    show("W_104_4", w.seq.entries(), 104);

    // Domain edges are hard errors, not silent clamps.
    println!("\nconstruct_w(16, 3): {}", construct_w(16, 3).unwrap_err());
    println!("construct_y(40, 3): {}", construct_y(40, 3).unwrap_err());
}

//! The braided line k[y]/(y^n) over k[Z/n] and its braiding
//! τ(y^i⊗y^j) = ζ^{ij} y^j⊗y^i.

use hopfcoh::linalg::{Element, LinearMap};
use hopfcoh::models::taft_pair;
use hopfcoh::scalars::make_prime_field;
use hopfcoh::yd::{braiding_tau, check_braiding_colinear, check_yd, regular_comodule};

fn main() -> hopfcoh::Result<()> {
    let f = make_prime_field(7)?;
    let pair = taft_pair(3, f)?;
    let (h, e) = (&pair.group_algebra, &pair.braided);
    println!("zeta = {}", pair.zeta);
    println!("{}", check_yd(h, &e.yd).summary());

    let tau = braiding_tau(h, &e.yd.module, &e.yd.comodule)?;
    let shape: Vec<_> = e.shape().iter().chain(e.shape()).cloned().collect();
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        let x = Element::basis(f, shape.clone(), i * 3 + j);
        println!("tau(y^{i}⊗y^{j}) = {}", tau.apply(&x)?.display());
    }
    let flip = LinearMap::flip_shapes(f, e.shape(), e.shape());
    println!("tau equals the flip: {}", tau == flip);

    println!("{}", check_braiding_colinear(h, &e.yd, &regular_comodule(h)).summary());
    Ok(())
}

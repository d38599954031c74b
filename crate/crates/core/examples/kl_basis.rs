//! Kazhdan-Lusztig basis elements of the antispherical module for B2.

use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::hecke::KlBasis;
use tiltcell::rootdata::RootSystem;

fn main() -> tiltcell::error::Result<()> {
    let g = Arc::new(AffineGroup::new(Arc::new(RootSystem::parse("B2")?), 5)?);
    let kl = KlBasis::new(g.clone());
    for x in g.ball(7) {
        println!("{}", kl.kl_element(&x)?.format_as(&x));
    }
    Ok(())
}

//! Minimal coset representatives, their alcoves and the blocks of C.

use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::rootdata::{RootSystem, Weight};

fn main() -> tiltcell::error::Result<()> {
    let g = AffineGroup::new(Arc::new(RootSystem::parse("G2")?), 7)?;
    let zero = Weight::zero(2);
    for x in g.ball(6) {
        println!("{:>8}  length {}  x.0 = {}", x.word_string(), x.length(), g.dot_act(x.element(), &zero));
    }
    println!("blocks:");
    for l0 in g.closed_alcove_points() {
        println!("  {l0}  stabilizer generators {:?}", g.stabilizer_generators(&l0)?);
    }
    let (w, l0) = g.resolve_dominant(&"7,0".parse()?)?;
    println!("(7,0) = {} . {l0}", w.word_string());
    Ok(())
}

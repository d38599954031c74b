//! Right cells of the G2 ball and their stability under enlarging it.

use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::cells::certified_partition;
use tiltcell::hecke::KlBasis;
use tiltcell::rootdata::RootSystem;

fn main() -> tiltcell::error::Result<()> {
    let g = Arc::new(AffineGroup::new(Arc::new(RootSystem::parse("G2")?), 7)?);
    let kl = KlBasis::new(g);
    let (p, stable) = certified_partition(&kl, 14)?;
    for (i, cell) in p.cells.iter().enumerate() {
        let words: Vec<String> = cell.iter().take(6).map(|x| x.word_string()).collect();
        let more = if cell.len() > 6 { " ..." } else { "" };
        println!("cell {i}: {} elements, stable {}: {}{more}", cell.len(), stable[i], words.join(" "));
    }
    println!("order: {:?}", p.order);
    Ok(())
}

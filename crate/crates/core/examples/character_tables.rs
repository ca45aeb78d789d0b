//! Print the ordinary character table of T_{4n} for a few small n.
//!
//! `cargo run --example character_tables -- 5`

use symclass::dicyclic::{character_table, DicyclicGroup};

fn main() -> symclass::Result<()> {
    let ns: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ns = if ns.is_empty() { vec![2, 3] } else { ns };
    for n in ns {
        let group = DicyclicGroup::new(n)?;
        let classes = group.conjugacy_classes();
        println!("T_{} ({} classes)", group.order(), classes.len());
        let header: Vec<String> = classes.iter().map(|c| format!(" {:>14}", c[0].to_string())).collect();
        println!("{:>8}{}", "", header.concat());
        for chi in character_table(&group)? {
            let row: Vec<String> = classes
                .iter()
                .map(|c| {
                    let z = chi.value(&c[0]).expect("total").to_complex();
                    format!(" {:>14}", format!("{:.3}{:+.3}i", z.re, z.im))
                })
                .collect();
            println!("{:>8}{}", chi.label(), row.concat());
        }
        println!();
    }
    Ok(())
}

//! Sweep the closed-form criteria against exact computation.

use symclass::harness::{verify, Claim, SweepSpec};

fn main() -> symclass::Result<()> {
    let spec = SweepSpec::new(vec![Claim::LinearBrauerPoly, Claim::OrdinaryDegreeTwoPoly, Claim::BrauerCount], vec![2, 3, 4])
        .primes(vec![2, 3, 5])
        .degrees(vec![2])
        .halt_on_disagreement(false);
    let records = verify(&spec)?;
    for rec in &records {
        println!("{:<60} predicted {:<5} computed {:<5} {}", rec.point.to_string(), rec.predicted, rec.computed, if rec.agrees { "ok" } else { "DISAGREE" });
    }
    let bad = records.iter().filter(|r| !r.agrees).count();
    println!("{} points, {bad} disagreements", records.len());
    Ok(())
}

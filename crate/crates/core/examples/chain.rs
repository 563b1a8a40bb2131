use std::time::Instant;
use zeta_bounds::prop::{prop_certify, PropParamsA, PropParamsB};
use zeta_bounds::rigor::Interval;
use zeta_bounds::thm1::{certify, gap_ratio, theorem1_table, BoundPiece, Grade, Thm1Params};

fn main() {
    let t0 = Instant::now();
    let thm1 = certify(&Thm1Params::paper()).unwrap();
    println!("thm1: {:?}", t0.elapsed());
    let t1 = Instant::now();
    let prop = prop_certify(
        &PropParamsA::paper_part1(),
        &PropParamsA::paper_part2(),
        Some(&PropParamsB::paper_part3()),
    )
    .unwrap();
    println!("prop: {:?}", t1.elapsed());
    println!("B1a = {}", prop.parts[0].constant);
    println!("B1b = {}", prop.parts[1].constant);
    println!("B3  = {}", prop.part3.as_ref().unwrap().b3);
    println!("h'  = {}", prop.part3.as_ref().unwrap().h_prime);
    for (n, o) in &prop.target_checks {
        println!("  {n}: {o}");
    }

    let t2 = Instant::now();
    let table = theorem1_table(&thm1, &prop, &Interval::parse("1.721").unwrap()).unwrap();
    println!("table(1.721): {:?} verdict {:?}", t2.elapsed(), table.verdict);
    for row in &table.rows {
        println!("  {}: {} on [{:.2},{:.2}]", row.piece.name, row.outcome, row.assigned_log_range.0, row.assigned_log_range.1);
    }
    let t3 = Instant::now();
    let table170 = theorem1_table(&thm1, &prop, &Interval::parse("1.70").unwrap()).unwrap();
    println!("table(1.70): {:?} verdict {:?}", t3.elapsed(), table170.verdict);
    for row in table170.rows.iter().filter(|r| r.witness_log_t.is_some()) {
        println!("  refuted: {} witness log t = {:?}", row.piece.name, row.witness_log_t);
    }

    let t4 = Instant::now();
    let pieces = vec![
        BoundPiece::log_linear("logt", Interval::from_u64(1), Interval::from_u64(0), (1.1, f64::INFINITY), Grade::External),
        BoundPiece::log_linear("logt/2+1.93", Interval::ratio(1, 2), Interval::parse("1.93").unwrap(), (1.1, f64::INFINITY), Grade::External),
        BoundPiece::log_linear("logt/5+44.02", Interval::ratio(1, 5), Interval::parse("44.02").unwrap(), (1.1, f64::INFINITY), Grade::External),
    ];
    let (ratio, arg) = gap_ratio((16.01, 705.64), &pieces, 4096).unwrap();
    println!("gap_ratio: {:?} -> {} at log t = {arg}", t4.elapsed(), ratio);
}

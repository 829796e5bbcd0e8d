//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion that cannot hold as stated is still printed as FAIL with the
//! computed evidence; it is listed in `UNATTAINABLE` and does not change the
//! exit status. Any other failure exits non-zero.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{near_zero, random_eighth_rect, random_polygon, random_quad, FixedOracle, GridOracle};
use lattice_periodic::theorems::*;
use lattice_periodic::tilings::*;
use lattice_periodic::{Boundary, ConvexPolygon, Lattice2, PeriodicSet, Point, QuadNum, Rat, Status};

/// Criteria that fail as stated, with the reason.
const UNATTAINABLE: &[(u32, &str)] = &[(
    6,
    "a 9/10-shrunk cell has area 0.81*det, above det/k once k >= 2, and the exact search finds it covering for five tilings",
)];

/// Recorded invariants per tiling: `(k, det, k/det)`.
const TABLE2: [(TilingId, usize, &str, &str); 11] = [
    (TilingId::Square, 1, "1", "1"),
    (TilingId::Triangular, 1, "1/2*r3", "2/3*r3"),
    (TilingId::Hexagonal, 2, "3/2*r3", "4/9*r3"),
    (TilingId::ElongatedTriangular, 2, "1 + 1/2*r3", "8 - 4*r3"),
    (TilingId::Trihexagonal, 3, "2*r3", "1/2*r3"),
    (TilingId::SnubSquare, 4, "2 + r3", "8 - 4*r3"),
    (TilingId::TruncatedSquare, 4, "3 + 2*r2", "12 - 8*r2"),
    (TilingId::SnubHexagonal, 6, "7/2*r3", "4/7*r3"),
    (TilingId::TruncatedHexagonal, 6, "6 + 7/2*r3", "28*r3 - 48"),
    (TilingId::Rhombitrihexagonal, 6, "3 + 2*r3", "4*r3 - 6"),
    (TilingId::TruncatedTrihexagonal, 12, "9 + 6*r3", "8/3*r3 - 4"),
];

const CRITERION_TILINGS: [TilingId; 5] = [
    TilingId::Square,
    TilingId::Triangular,
    TilingId::Hexagonal,
    TilingId::ElongatedTriangular,
    TilingId::SnubHexagonal,
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn q(s: &str) -> QuadNum {
    s.parse().unwrap()
}

fn p(x: &str, y: &str) -> Point {
    Point::parse(x, y).unwrap()
}

fn table_reproduced(records: &[TilingRecord]) -> Result<(), String> {
    let rows = table();
    if rows.len() != 11 {
        return Err(format!("{} rows", rows.len()));
    }
    for ((id, k, det, coef), (row, rec)) in TABLE2.iter().zip(rows.iter().zip(records)) {
        if rec.id != *id || row.k != *k || rec.det != q(det) || rec.coefficient != q(coef) || row.det.exact != q(det).to_string()
        {
            return Err(format!("{id}: k {} det {} coefficient {}", rec.k, rec.det, rec.coefficient));
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let records = all_records();
    match table_reproduced(&records) {
        Ok(()) => Outcome { pass: true, detail: "11 rows; k, det and k/det equal the table exactly".into() },
        Err(e) => Outcome { pass: false, detail: e },
    }
}

fn criterion_holders(records: &[TilingRecord]) -> Vec<TilingId> {
    records.iter().filter(|r| r.set.criterion_check()).map(|r| r.id).collect()
}

fn criterion_2() -> Outcome {
    let records = all_records();
    let holders = criterion_holders(&records);
    let routes_agree = records.iter().all(|r| r.set.criterion_check() == r.set.criterion_pairwise());
    let names: Vec<String> = holders.iter().map(|id| id.to_string()).collect();
    Outcome {
        pass: holders == CRITERION_TILINGS && routes_agree,
        detail: format!("V-V = V u -V holds for {}; class-set and pairwise routes agree: {routes_agree}", names.join(" ")),
    }
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut eps = Vec::new();
    for rec in all_records() {
        match tightness_check(&rec.set) {
            Ok(r) if r.tight => eps.push(format!("{}:{}", rec.id, r.epsilon)),
            Ok(r) => bad.push(format!("{} bound {} max {} k {}", rec.id, r.bound, r.max_count, r.k)),
            Err(e) => bad.push(format!("{}: {e}", rec.id)),
        }
    }
    if bad.is_empty() {
        Outcome { pass: true, detail: format!("max count = bound = k for all 11 ({})", eps.join(" ")) }
    } else {
        Outcome { pass: false, detail: bad.join("; ") }
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb11c);
    let mut failures = Vec::new();
    let mut checked = 0;
    for id in TilingId::ALL {
        let v = catalog(id).set;
        for _ in 0..50 {
            let d = random_polygon(&mut rng);
            let bound = blichfeldt_bound(&v, &d.area()).unwrap();
            let max = max_translate_count(&v, &d).unwrap().count;
            let min = min_translate_count(&v, &d, Boundary::Closed).unwrap().count;
            let oracle = GridOracle::new(&v, &d);
            let (gmin, gmax) = oracle.extremes(&v, &d, Boundary::Closed, 64);
            if (max as u64) < bound || gmax > max || gmin < min {
                failures.push(format!("{id} {:?}: bound {bound} max {max} grid {gmax}, min {min} grid {gmin}", d.vertices()));
            }
            checked += 1;
        }
    }
    // grid-aligned arrangements, where the grid must hit every extreme
    let z2 = PeriodicSet::from_lattice(Lattice2::integer());
    for _ in 0..20 {
        let d = random_eighth_rect(&mut rng);
        let oracle = GridOracle::new(&z2, &d);
        let (gmin, gmax) = oracle.extremes(&z2, &d, Boundary::Closed, 64);
        let max = max_translate_count(&z2, &d).unwrap().count;
        let min = min_translate_count(&z2, &d, Boundary::Closed).unwrap().count;
        if (gmin, gmax) != (min, max) {
            failures.push(format!("aligned {:?}: exact ({min}, {max}) grid ({gmin}, {gmax})", d.vertices()));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{checked} polygons: max >= bound, grid max <= max, grid min >= min; 20 aligned cases equal")
        } else {
            failures.join("; ")
        },
    }
}

/// Smallest multiple of 1/8 with `4 s² >= 4·det/k`.
fn gate_scale(v: &PeriodicSet) -> QuadNum {
    let need = covering_volume_bound(v);
    let mut eighths = (need.to_f64().sqrt() * 8.0).floor() as i64;
    loop {
        let s = QuadNum::frac(eighths, 8);
        if s.square() >= need {
            return s;
        }
        eighths += 1;
    }
}

fn criterion_5() -> Outcome {
    let hexagon = ConvexPolygon::new(vec![
        p("r2", "0"),
        p("1/2*r2", "1/2*r6"),
        p("-1/2*r2", "1/2*r6"),
        p("-r2", "0"),
        p("-1/2*r2", "-1/2*r6"),
        p("1/2*r2", "-1/2*r6"),
    ])
    .unwrap();
    let mut notes = Vec::new();
    let mut pass = hexagon.area() == q("3*r3");
    let r = minkowski_check(&catalog(TilingId::Hexagonal).set, &hexagon, 1).unwrap();
    pass &= r.hypotheses_hold && r.set_count.is_some_and(|c| c >= 2) && r.status == Status::Verified;
    notes.push(format!("(6³) hexagon of area 3√3: {} points of V", r.set_count.unwrap_or(0)));
    for id in CRITERION_TILINGS {
        let v = catalog(id).set;
        let s = gate_scale(&v);
        let k = ConvexPolygon::rect(-&s, -&s, s.clone(), s.clone()).unwrap();
        let r = minkowski_check(&v, &k, 1).unwrap();
        pass &= r.hypotheses_hold && r.difference_count >= 3 && r.status == Status::Verified;
        notes.push(format!("{id} [-{s},{s}]²: {} of V-V", r.difference_count));
    }
    Outcome { pass, detail: notes.join(", ") }
}

fn criterion_6() -> Outcome {
    let mut cell_ok = true;
    let mut shrunk_covering = Vec::new();
    let mut notes = Vec::new();
    for rec in all_records() {
        let v = &rec.set;
        let cell = v.lattice().fundamental_cell();
        match is_covering(v, &cell, Boundary::Closed) {
            Ok(true) => {}
            other => {
                cell_ok = false;
                notes.push(format!("{} cell: {other:?}", rec.id));
            }
        }
        cell_ok &= cell.area() >= covering_volume_bound(v);
        let shrunk = shrunk_cell(v.lattice(), &Rat::new(1, 10)).unwrap();
        let r = covering_check(v, &shrunk, Boundary::Closed).unwrap();
        if r.covering {
            // the grid can only overestimate the least count
            let reflected = shrunk.reflect();
            let oracle = GridOracle::new(v, &reflected);
            let (gmin, _) = oracle.extremes(v, &reflected, Boundary::Closed, 64);
            shrunk_covering.push(format!("{} (least count {}, grid {gmin})", rec.id, r.min_count));
        }
    }
    let detail = format!(
        "closed cells cover with area >= det/k for all 11: {cell_ok}; 9/10-shrunk cell still covers for {}",
        if shrunk_covering.is_empty() { "none".to_string() } else { shrunk_covering.join(", ") }
    );
    let detail = if notes.is_empty() { detail } else { format!("{detail}; {}", notes.join("; ")) };
    Outcome { pass: cell_ok && shrunk_covering.is_empty(), detail }
}

fn criterion_7() -> Outcome {
    let v = catalog(TilingId::Trihexagonal).set;
    let (d1, d2) = canonical_cells(v.lattice(), &Rat::new(9, 10)).unwrap();
    let r = theorem5_verify(&v, &d1, &d2, 3).unwrap();
    let hexagon = d1.difference_body(&d2);
    let oracle = GridOracle::new(&v, &hexagon);
    let (gmin, _) = oracle.extremes(&v, &hexagon, Boundary::Closed, 64);
    let z = Point::parse(&r.set_min_witness.x.exact, &r.set_min_witness.y.exact).unwrap();
    let at_witness = oracle.count(&hexagon, &z, Boundary::Closed);
    let oracle_ok = gmin >= r.set_min && at_witness == r.set_min;
    let pass = r.hypotheses_hold && r.conclusion_ok && r.status == Status::Verified && oracle_ok;
    Outcome {
        pass,
        detail: format!(
            "hypotheses {}, least count of V-V {} (>= 3: {}); recorded: least count of V itself {} (grid {gmin}, oracle at witness {at_witness}), so 'at least three vertices' {}",
            r.hypotheses_hold,
            r.conclusion_min,
            r.conclusion_ok,
            r.set_min,
            if r.set_min >= 3 { "holds" } else { "fails" }
        ),
    }
}

fn criterion_8() -> Outcome {
    let offset = p("1/7", "1/11");
    let mut silent = Vec::new();
    let mut fired = Vec::new();
    for id in TilingId::ALL {
        let data = tiling_data(id);
        let last = data.translates.len() - 1;
        let mut mutated = data.clone();
        let t = Point::parse(&data.translates[last][0], &data.translates[last][1]).unwrap() + offset.clone();
        mutated.translates[last] = [t.x.to_string(), t.y.to_string()];
        let rec = TilingRecord::from_data(id, &mutated).unwrap();
        assert!(!rec.set.lattice().member(&offset));
        let mut hits = Vec::new();
        if !rec.validate().is_empty() {
            hits.push("1");
        }
        if rec.set.criterion_check() != CRITERION_TILINGS.contains(&id) {
            hits.push("2");
        }
        if !tightness_check(&rec.set).map(|r| r.tight).unwrap_or(false) {
            hits.push("3");
        }
        if hits.is_empty() {
            silent.push(id.to_string());
        } else {
            fired.push(format!("{id}:{}", hits.join("+")));
        }
    }
    Outcome {
        pass: silent.is_empty(),
        detail: if silent.is_empty() {
            format!("all 11 mutations caught ({})", fired.join(" "))
        } else {
            format!("undetected: {}", silent.join(" "))
        },
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9f1e);
    let mut failures = Vec::new();
    for _ in 0..1_000 {
        let (x, y, z) = (random_quad(&mut rng, 30, 9), random_quad(&mut rng, 30, 9), random_quad(&mut rng, 30, 9));
        let axioms = &x + &y == &y + &x
            && &x * &y == &y * &x
            && &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
            && x.inverse().map(|i| &i * &x == QuadNum::one()).unwrap_or(x.is_zero());
        if !axioms {
            failures.push(format!("axioms at {x}, {y}, {z}"));
        }
        let n = QuadNum::from_rat(Rat::from_bigint(x.floor()));
        if !(n <= x && x < &n + &QuadNum::one()) {
            failures.push(format!("floor of {x}"));
        }
        if x.to_string().parse::<QuadNum>().ok() != Some(x.clone()) {
            failures.push(format!("round trip of {x}"));
        }
    }
    let oracle = FixedOracle::default();
    let mut agree = 0;
    for i in 0..10_000 {
        let x = if i % 3 == 0 { near_zero(&mut rng) } else { random_quad(&mut rng, 25, 8) };
        match oracle.sign(&x) {
            Some(s) if s == x.sign() => agree += 1,
            None if x.is_zero() => agree += 1,
            other => failures.push(format!("sign of {x}: oracle {other:?}, exact {}", x.sign())),
        }
        if i % 5 == 0 {
            if let Some(f) = oracle.floor(&x) {
                if f != x.floor() {
                    failures.push(format!("floor of {x} against oracle"));
                }
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("1000 axiom/floor/round-trip samples; sign agrees with the 256-bit oracle on {agree}/10000")
        } else {
            failures.into_iter().take(5).collect::<Vec<_>>().join("; ")
        },
    }
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 9] = [
        (1, "catalog invariants", Duration::from_secs(1), criterion_1),
        (2, "criterion classification", Duration::from_secs(1), criterion_2),
        (3, "Blichfeldt tightness", Duration::from_secs(30), criterion_3),
        (4, "Blichfeldt lower bound on random polygons", Duration::from_secs(300), criterion_4),
        (5, "Minkowski-type counts", Duration::from_secs(30), criterion_5),
        (6, "covering", Duration::from_secs(60), criterion_6),
        (7, "difference-body covering, (3.6.3.6) hexagon", Duration::from_secs(120), criterion_7),
        (8, "mutation liveness", Duration::from_secs(60), criterion_8),
        (9, "qfield properties", Duration::from_secs(30), criterion_9),
    ];
    let mut unexpected = 0;
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= budget;
        let pass = out.pass && in_time;
        let known = UNATTAINABLE.iter().find(|(c, _)| *c == n);
        println!(
            "criterion {n}: {} {name}: {} [{:.2}s of {}s]",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64(),
            budget.as_secs()
        );
        if !pass {
            match known {
                Some((_, why)) => println!("    unattainable as stated: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

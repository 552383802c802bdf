use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kanlab::boxes::{
    box_action, box_projection, check_adjacency, check_naive_coherence, enumerate_boxes,
    member_face, nerve, realize, reindex, NaiveCoherence,
};
use kanlab::codiscrete::{codiscrete_interval, codiscrete_nerve, corners, minimal_interval, product};
use kanlab::cubeset::geometric_of_algebraic;
use kanlab::fib::{
    codiscrete_fib_table, fibers, is_kan_fibration, product_fib_table, transport,
};
use kanlab::kan::{
    algebraic_filling, check_geometric_filling, check_section, check_uniform, codiscrete_table,
    fillers, geometric_filling, is_kan, synthesize_uniform,
};
use kanlab::{
    enumerate_morphisms, AlgBox, BoxShape, CubeId, CubicalMap, DimName, DimSet, EndPoint,
    FaceFamily, FiniteCubicalSet, GeomBox, Generator, KanVerdict, Polarity, Synthesis,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn intervals(bound: usize) -> Vec<(&'static str, FiniteCubicalSet)> {
    vec![
        ("codiscrete", codiscrete_interval(bound).unwrap()),
        ("minimal", minimal_interval(bound).unwrap()),
    ]
}

fn small_shapes() -> Vec<BoxShape> {
    let mut out = Vec::new();
    for pol in Polarity::BOTH {
        for i in 0..=1 {
            for j in 0..=1 {
                out.push(BoxShape::canonical(i, j, pol));
            }
        }
    }
    out
}

/// Every face family of a shape, valid or not, by plain cartesian product.
fn all_families(x: &FiniteCubicalSet, shape: &BoxShape) -> Vec<FaceFamily> {
    let dim = shape.dim() - 1;
    let mut out = vec![FaceFamily::new()];
    for f in shape.afm() {
        out = out
            .into_iter()
            .flat_map(|fam| {
                x.cubes(dim).map(move |c| {
                    let mut fam = fam.clone();
                    fam.insert(f.clone(), c);
                    fam
                })
            })
            .collect();
    }
    out
}

fn valid_boxes(x: &FiniteCubicalSet, shape: &BoxShape) -> Vec<AlgBox> {
    all_families(x, shape)
        .into_iter()
        .filter(|fam| check_adjacency(x, shape, fam).unwrap().is_empty())
        .map(|fam| AlgBox::new(x, shape.clone(), &fam).unwrap())
        .collect()
}

fn interval_sizes() -> Outcome {
    let cod = codiscrete_interval(3).map_err(|e| e.to_string())?.carrier_sizes();
    let min = minimal_interval(2).map_err(|e| e.to_string())?.carrier_sizes();
    ensure(cod == [2, 4, 16, 256], || format!("codiscrete sizes {cod:?}"))?;
    ensure(min == [2, 3, 4], || format!("minimal sizes {min:?}"))?;
    Ok(format!("codiscrete {cod:?}, minimal {min:?}"))
}

/// The sixteen squares of the interval as drawn: corners and edges listed as
/// (top-left, top-right, bottom-left, bottom-right) and (top, bottom, left,
/// right). The horizontal axis is `d1`, the vertical axis `d2`; edges run
/// left to right and bottom to top. Edge names: `0`, `1` are the degenerate
/// lines at a point, `s` is the segment from 0 to 1, `r` its reverse.
const SQUARES: [([u8; 4], [char; 4]); 16] = [
    ([0, 0, 0, 0], ['0', '0', '0', '0']),
    ([1, 1, 1, 1], ['1', '1', '1', '1']),
    ([1, 1, 0, 0], ['1', '0', 's', 's']),
    ([0, 0, 1, 1], ['0', '1', 'r', 'r']),
    ([0, 1, 0, 1], ['s', 's', '0', '1']),
    ([1, 0, 1, 0], ['r', 'r', '1', '0']),
    ([0, 1, 1, 0], ['s', 'r', 'r', 's']),
    ([1, 0, 0, 1], ['r', 's', 's', 'r']),
    ([0, 0, 0, 1], ['0', 's', '0', 'r']),
    ([0, 1, 0, 0], ['s', '0', '0', 's']),
    ([0, 0, 1, 0], ['0', 'r', 'r', '0']),
    ([1, 0, 0, 0], ['r', '0', 's', '0']),
    ([1, 1, 1, 0], ['1', 'r', '1', 's']),
    ([1, 0, 1, 1], ['r', '1', '1', 'r']),
    ([1, 1, 0, 1], ['1', 's', 's', '1']),
    ([0, 1, 1, 1], ['s', '1', 'r', '1']),
];

fn edge_ends(e: char) -> (u8, u8) {
    match e {
        '0' => (0, 0),
        '1' => (1, 1),
        's' => (0, 1),
        'r' => (1, 0),
        _ => unreachable!(),
    }
}

fn drawn_squares() -> Outcome {
    let x = codiscrete_interval(2).map_err(|e| e.to_string())?;
    for (i, ([tl, tr, bl, br], [top, bottom, left, right])) in SQUARES.iter().enumerate() {
        let drawn = [(*top, (*tl, *tr)), (*bottom, (*bl, *br)), (*left, (*bl, *tl)), (*right, (*br, *tr))];
        for (e, ends) in drawn {
            ensure(edge_ends(e) == ends, || format!("diagram {i}: edge {e} does not join its corners"))?;
        }
    }
    let line = |e: char| {
        let (a, b) = edge_ends(e);
        x.lookup(1, &format!("{a}{b}")).unwrap()
    };
    let face = |d: usize, end: EndPoint, c: CubeId| {
        let name = DimName::canonical(d);
        let f = kanlab::CubeMorphism::face(&DimSet::canonical(2).without(&name), &name, end).unwrap();
        let sigma = kanlab::CubeMorphism::renaming(f.cod(), &DimSet::canonical(1)).unwrap();
        x.action(&f.compose(&sigma).unwrap(), c).unwrap()
    };
    let mut matched = BTreeSet::new();
    for c in x.cubes(2) {
        let v = corners(2, 2, c);
        let (bl, br, tl, tr) = (v[0] as u8, v[1] as u8, v[2] as u8, v[3] as u8);
        let hits: Vec<usize> = SQUARES
            .iter()
            .enumerate()
            .filter(|(_, (cs, _))| *cs == [tl, tr, bl, br])
            .map(|(i, _)| i)
            .collect();
        ensure(hits.len() == 1, || format!("square {} matches {} diagrams", x.label(2, c), hits.len()))?;
        let [top, bottom, left, right] = SQUARES[hits[0]].1;
        let faces = [
            (face(0, EndPoint::Zero, c), left),
            (face(0, EndPoint::One, c), right),
            (face(1, EndPoint::Zero, c), bottom),
            (face(1, EndPoint::One, c), top),
        ];
        for (actual, drawn) in faces {
            ensure(actual == line(drawn), || {
                format!("square {} has face {} where the diagram shows {drawn}", x.label(2, c), x.label(1, actual))
            })?;
        }
        matched.insert(hits[0]);
    }
    ensure(matched.len() == 16, || format!("{} diagrams matched", matched.len()))?;
    Ok("16 squares, 16 diagrams, one to one".into())
}

fn nerve_realization() -> Outcome {
    let mut total = 0;
    for (name, x) in intervals(3) {
        for shape in small_shapes() {
            let boxes = valid_boxes(&x, &shape);
            let listed = enumerate_boxes(&x, &shape).map_err(|e| e.to_string())?;
            ensure(boxes == listed, || format!("{name} {shape}: enumeration differs from brute force"))?;
            let mut seen: BTreeSet<GeomBox> = BTreeSet::new();
            for b in &boxes {
                let beta = realize(&x, b).map_err(|e| e.to_string())?;
                ensure(nerve(&beta).map_err(|e| e.to_string())? == *b, || {
                    format!("{name}: nerve of realization differs for {}", b.describe(&x))
                })?;
                let again = realize(&x, &nerve(&beta).unwrap()).unwrap();
                ensure(again == beta, || format!("{name}: realization of nerve differs"))?;
                seen.insert(beta);
            }
            ensure(seen.len() == boxes.len(), || format!("{name} {shape}: realization not injective"))?;
            total += boxes.len();
        }
    }
    Ok(format!("{total} boxes at bound 3"))
}

fn naturality_in_extra() -> Outcome {
    let extras = [BoxShape::canonical_extra(0), BoxShape::canonical_extra(1)];
    let mut squares = 0;
    for (name, x) in intervals(3) {
        for shape in small_shapes() {
            let boxes = valid_boxes(&x, &shape);
            for target in &extras {
                for h in enumerate_morphisms(shape.extra(), target) {
                    for b in &boxes {
                        let moved = box_action(&x, &h, b).map_err(|e| e.to_string())?;
                        let beta = realize(&x, b).map_err(|e| e.to_string())?;
                        let geometric = nerve(&reindex(&x, &beta, &h).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        ensure(geometric == moved, || {
                            format!("{name}: square fails for {h} on {}", b.describe(&x))
                        })?;
                        squares += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{squares} squares commute"))
}

fn projection_compatibility() -> Outcome {
    let mut checked = 0;
    for (name, x) in intervals(2) {
        for shape in BoxShape::all_canonical(2) {
            for c in x.cubes(shape.dim()) {
                let kappa = geometric_of_algebraic(&x, shape.full(), c).map_err(|e| e.to_string())?;
                let table: BTreeMap<_, _> = kappa
                    .table()
                    .iter()
                    .filter(|(m, _)| member_face(&shape, m).is_some())
                    .map(|(m, &v)| (m.clone(), v))
                    .collect();
                let projected = nerve(&GeomBox::from_table(shape.clone(), table)).map_err(|e| e.to_string())?;
                let algebraic = box_projection(&x, &shape, c).map_err(|e| e.to_string())?;
                ensure(projected == algebraic, || format!("{name}: projections differ at {}", x.label(shape.dim(), c)))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} cubes"))
}

fn adjacency_coherence() -> Outcome {
    let (mut valid, mut invalid) = (0, 0);
    for (name, x) in intervals(3) {
        for shape in small_shapes() {
            let naive = NaiveCoherence::new(&shape, x.bound());
            for fam in all_families(&x, &shape) {
                let adjacent = check_adjacency(&x, &shape, &fam).map_err(|e| e.to_string())?.is_empty();
                let aligned = shape.align(&fam).map_err(|e| e.to_string())?;
                let coherent = naive.check(&x, &aligned).is_empty();
                ensure(adjacent == coherent, || {
                    format!("{name} {shape}: adjacency {adjacent}, coherence {coherent}")
                })?;
                if adjacent {
                    valid += 1;
                } else {
                    invalid += 1;
                }
            }
        }
        let shape = BoxShape::canonical(1, 0, Polarity::Positive);
        let fam = all_families(&x, &shape).into_iter().next().unwrap();
        let direct = check_naive_coherence(&x, &shape, &fam).map_err(|e| e.to_string())?;
        ensure(direct.is_empty(), || format!("{name}: constant family incoherent"))?;
    }
    Ok(format!("{valid} valid and {invalid} invalid families agree"))
}

fn minimal_not_kan() -> Outcome {
    let x = minimal_interval(2).map_err(|e| e.to_string())?;
    let KanVerdict::NotKan { witness } = is_kan(&x) else {
        return Err("minimal interval reported Kan".into());
    };
    ensure(fillers(&x, &witness).map_err(|e| e.to_string())?.is_empty(), || "witness has fillers".into())?;
    let shape = witness.shape();
    ensure(x.carrier_len(shape.dim()) == 4 || shape.dim() < 2, || "unexpected carrier".into())?;
    for c in x.cubes(shape.dim()) {
        let agrees = shape.afm().iter().all(|f| {
            let inst = shape.face_instance(f);
            let sigma = kanlab::CubeMorphism::renaming(inst.cod(), &DimSet::canonical(inst.cod().len())).unwrap();
            x.action(&inst.compose(&sigma).unwrap(), c).unwrap() == witness.face(f).unwrap()
        });
        ensure(!agrees, || format!("{} fills the witness", x.label(shape.dim(), c)))?;
    }
    Ok(format!("witness {}", witness.describe(&x)))
}

fn codiscrete_uniform() -> Outcome {
    let x = codiscrete_interval(3).map_err(|e| e.to_string())?;
    let table = codiscrete_table(&x, 2).map_err(|e| e.to_string())?;
    let pols: BTreeSet<_> = table.iter().map(|(b, _)| b.shape().polarity()).collect();
    ensure(pols.len() == 2, || "table misses a polarity".into())?;
    let section = check_section(&x, &table);
    ensure(section.is_empty(), || format!("section: {}", section[0]))?;
    let uniform = check_uniform(&x, &table);
    ensure(uniform.is_empty(), || format!("uniformity: {}", uniform[0]))?;
    let small = codiscrete_interval(2).map_err(|e| e.to_string())?;
    let found = match synthesize_uniform(&small, 1_000_000) {
        Synthesis::Found(t) => t,
        Synthesis::Nonexistent { .. } => return Err("synthesis found no table".into()),
        Synthesis::BudgetExhausted { decisions } => return Err(format!("budget exhausted after {decisions}")),
    };
    ensure(check_section(&small, &found).is_empty() && check_uniform(&small, &found).is_empty(), || {
        "synthesized table fails its checks".into()
    })?;
    Ok(format!("{} entries at bound 3, synthesized {} at bound 2", table.len(), found.len()))
}

fn filling_equivalence() -> Outcome {
    let x = codiscrete_interval(2).map_err(|e| e.to_string())?;
    let table = codiscrete_table(&x, 2).map_err(|e| e.to_string())?;
    let g = geometric_filling(&x, &table).map_err(|e| e.to_string())?;
    ensure(algebraic_filling(&g).map_err(|e| e.to_string())? == table, || "round trip differs".into())?;
    let report = check_geometric_filling(&x, &g);
    ensure(report.is_empty(), || report[0].clone())?;
    Ok(format!("{} lifts", g.len()))
}

fn fibration_layer() -> Outcome {
    for (name, x) in intervals(2) {
        let t = CubicalMap::terminal(&x);
        ensure(is_kan_fibration(&t).is_kan() == is_kan(&x).is_kan(), || format!("{name}: verdicts differ"))?;
    }
    let p = CubicalMap::codiscrete(&["a0", "a1"], &["0", "1"], &[0, 1], 2).map_err(|e| e.to_string())?;
    let table = codiscrete_fib_table(&p, &[0, 1], 2).map_err(|e| e.to_string())?;
    let (y, base) = (p.source(), p.target());
    let a0 = y.lookup(0, "a0").unwrap();
    let moved = transport(&p, &table, base.lookup(1, "01").unwrap(), a0).map_err(|e| e.to_string())?;
    ensure(y.label(0, moved) == "a1", || format!("seg sends a0 to {}", y.label(0, moved)))?;
    for point in base.cubes(0) {
        let flat = base.act(Generator::Inclusion { dim: 0 }.key(), point).unwrap();
        for y0 in fibers(&p, 0, point).unwrap() {
            let out = transport(&p, &table, flat, y0).map_err(|e| e.to_string())?;
            ensure(out == y0, || format!("degenerate line moves {}", y.label(0, y0)))?;
        }
    }
    let x = codiscrete_interval(2).unwrap();
    let f = codiscrete_nerve(&["p", "q", "r"], 2).unwrap();
    let proj = CubicalMap::product_projection(&x, &f).map_err(|e| e.to_string())?;
    let ftable = codiscrete_table(&f, 3).map_err(|e| e.to_string())?;
    let ptable = product_fib_table(&proj, &f, &ftable).map_err(|e| e.to_string())?;
    let total = product(&x, &f).unwrap();
    let mut moves = 0;
    for kappa in x.cubes(1) {
        let start = x.act(Generator::Face { dim: 1, end: EndPoint::Zero }.key(), kappa).unwrap();
        for y0 in fibers(&proj, 0, start).unwrap() {
            let out = transport(&proj, &ptable, kappa, y0).map_err(|e| e.to_string())?;
            let (_, before) = kanlab::codiscrete::product_parts(&f, 0, y0);
            let (_, after) = kanlab::codiscrete::product_parts(&f, 0, out);
            ensure(before == after, || format!("product transport moves {}", total.label(0, y0)))?;
            moves += 1;
        }
    }
    Ok(format!("{moves} product transports fix the fiber component"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("interval cardinalities", Duration::from_secs(1), interval_sizes),
        ("square diagrams", Duration::from_secs(1), drawn_squares),
        ("nerve and realization inverse", Duration::from_secs(30), nerve_realization),
        ("naturality in extra names", Duration::from_secs(30), naturality_in_extra),
        ("projection compatibility", Duration::from_secs(5), projection_compatibility),
        ("adjacency iff naive coherence", Duration::from_secs(60), adjacency_coherence),
        ("minimal interval not Kan", Duration::from_secs(5), minimal_not_kan),
        ("codiscrete interval uniformly Kan", Duration::from_secs(300), codiscrete_uniform),
        ("filling operation equivalence", Duration::from_secs(60), filling_equivalence),
        ("fibration layer", Duration::from_secs(30), fibration_layer),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Byte-exact output fixtures. Run with `GAPCYCLE_BLESS=1` to rewrite them.

use std::path::PathBuf;

use gapcycle::instance::{gen_random_gap, gen_unique_cost};
use gapcycle::ipgap::{build_model, export_lp};
use gapcycle::solver::{brute_force_solve_threads, landscape};
use gapcycle::sortedm::{build_sorted_m, frontier_of};
use gapcycle::viz::{
    export_landscape_csv, parse_landscape_csv, render_cost_matrix, render_sorted_m, render_vertex_index, GREEN, RED,
};
use gapcycle::{CostMatrix, Cycle, Kind};

const INF: f64 = f64::INFINITY;

fn check(name: &str, bytes: &[u8]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("GAPCYCLE_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, bytes).unwrap();
        return;
    }
    let want = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(want == bytes, "{name} differs from golden");
}

#[test]
fn cost_matrix_pgm() {
    let m = CostMatrix::new(
        3,
        vec![vec![INF, 1.0, 3.0], vec![2.0, INF, 5.0], vec![4.0, 0.0, INF]],
        Kind::ArbitraryGap,
    )
    .unwrap();
    let pgm = render_cost_matrix(&m).unwrap().to_pgm();
    assert_eq!(&pgm[..11], b"P5\n3 3\n255\n");
    check("cost3.pgm", &pgm);
}

#[test]
fn sorted_m_ppm_independent_of_threads() {
    let m = gen_random_gap(5, 11, 0.0, 1.0).unwrap();
    let s = build_sorted_m(&m);
    let f = frontier_of(&s, &Cycle::descending(5)).unwrap();
    let best = brute_force_solve_threads(&m, 11, 1).unwrap().best;
    let img = render_sorted_m(&s, &f, Some(&best)).unwrap();
    assert_eq!(img.count(GREEN), 5);
    assert!(img.count(RED) <= 5);
    check("sorted5.ppm", &img.to_ppm());
    for k in [2, 4, 8] {
        let other = brute_force_solve_threads(&m, 11, k).unwrap().best;
        assert_eq!(render_sorted_m(&s, &f, Some(&other)).unwrap().to_ppm(), img.to_ppm());
    }
}

#[test]
fn vertex_index_pgm() {
    let s = build_sorted_m(&gen_random_gap(5, 11, 0.0, 1.0).unwrap());
    let img = render_vertex_index(&s);
    assert!(img.pixels.iter().all(|&p| [51, 102, 153, 204, 255].contains(&p)));
    check("vertex5.pgm", &img.to_pgm());
}

#[test]
fn lp_exports() {
    let m = CostMatrix::new(2, vec![vec![INF, 3.5], vec![-4.0, INF]], Kind::ArbitraryGap).unwrap();
    check("model2.lp", export_lp(&build_model(&m)).as_bytes());
    let lp = export_lp(&build_model(&gen_unique_cost(4).unwrap()));
    assert_eq!(lp.lines().skip_while(|l| *l != "Binary").skip(1).take_while(|l| *l != "End").count(), 16);
    check("unique4.lp", lp.as_bytes());
}

#[test]
fn landscape_csv() {
    let m = gen_random_gap(4, 9, -1.0, 1.0).unwrap();
    let rows = landscape(&m, &Cycle::descending(4), 11).unwrap();
    let csv = export_landscape_csv(&rows);
    assert_eq!(parse_landscape_csv(&csv).unwrap(), rows);
    check("landscape4.csv", csv.as_bytes());
}

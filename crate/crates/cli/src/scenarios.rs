//! Named reproduction scenarios for `sympow verify`. Each scenario runs a
//! fixed set of checks against frozen expected values and reports one
//! pass/fail line per check.

use num_rational::BigRational;

use sympow_core::caps::Caps;
use sympow_core::graphs::{
    self, compute_e, corona, cover_ideal, d_symbolic_formula, delta_formula, symbolic_power_cover,
    Graph,
};
use sympow_core::homology::{
    betti_table, has_linear_resolution, is_componentwise_linear, FieldSpec,
};
use sympow_core::monomial::MonomialIdeal;
use sympow_core::polyhedra;
use sympow_core::symbolic;

use crate::formats::{parse_graph, parse_ideal};

pub const FIXTURE_TRIANGLE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/triangle.graph"
));
pub const FIXTURE_G2: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/g2.graph"
));
pub const FIXTURE_CORONA_K3_1: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/corona-k3-1.graph"
));
pub const FIXTURE_CORONA_K3_2: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/corona-k3-2.graph"
));
pub const FIXTURE_EIGHTEEN: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/eighteen-vertex.graph"
));
pub const FIXTURE_FIVE_VARIABLE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/five-variable.ideal"
));
pub const FIXTURE_FOUR_VARIABLE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/four-variable.ideal"
));

pub struct Check {
    pub name: String,
    pub pass: bool,
}

fn check(out: &mut Vec<Check>, name: impl Into<String>, pass: bool) {
    out.push(Check {
        name: name.into(),
        pass,
    });
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub const SCENARIOS: &[&str] = &[
    "triangle-symbolic-square",
    "five-variable-depth-parity",
    "corona-K3-2",
    "corona-generator-degrees",
    "star-graph-counterexample",
    "four-variable-regularity",
    "eighteen-vertex",
    "corona-K3-1-linear",
    "all",
];

pub fn run(scenario: &str, caps: &Caps) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    match scenario {
        "triangle-symbolic-square" => triangle_symbolic_square(caps, &mut checks),
        "five-variable-depth-parity" => five_variable_depth_parity(caps, &mut checks),
        "corona-K3-2" => corona_k3_2(caps, &mut checks),
        "corona-generator-degrees" => corona_generator_degrees(caps, &mut checks),
        "star-graph-counterexample" => star_graph_counterexample(caps, &mut checks),
        "four-variable-regularity" => four_variable_regularity(caps, &mut checks),
        "eighteen-vertex" => eighteen_vertex(caps, &mut checks),
        "corona-K3-1-linear" => corona_k3_1_linear(caps, &mut checks),
        "all" => {
            for name in SCENARIOS.iter().filter(|&&s| s != "all") {
                checks.extend(run(name, caps)?);
            }
            Ok(())
        }
        other => {
            return Err(format!(
                "unknown scenario `{other}`; known scenarios: {}",
                SCENARIOS.join(", ")
            ))
        }
    }
    .map_err(|e| e.to_string())?;
    Ok(checks)
}

fn triangle(caps: &Caps) -> sympow_core::Result<(Graph, MonomialIdeal)> {
    let _ = caps;
    let g = parse_graph(FIXTURE_TRIANGLE).expect("fixture parses");
    let j = cover_ideal(&g)?;
    Ok((g, j))
}

fn triangle_symbolic_square(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let (_, j) = triangle(caps)?;
    let square = symbolic::symbolic_power(&j, 2, caps)?;
    let expected =
        MonomialIdeal::from_exponents(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2], &[1, 1, 1]])?;
    check(
        out,
        "triangle symbolic square equals frozen ideal",
        square == expected,
    );
    Ok(())
}

fn five_variable_depth_parity(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let file = parse_ideal(FIXTURE_FIVE_VARIABLE).expect("fixture parses");
    // the fixture is the intersection of its three primary components
    let q1 =
        MonomialIdeal::from_exponents(5, &[&[2, 0, 0, 0, 0], &[0, 2, 0, 0, 0], &[0, 0, 2, 0, 0]])?
            .power(2)?;
    let q2 =
        MonomialIdeal::from_exponents(5, &[&[3, 0, 0, 0, 0], &[0, 3, 0, 0, 0], &[0, 0, 0, 1, 0]])?;
    let q3 = MonomialIdeal::from_exponents(5, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]])?;
    let intersection = q1.intersect(&q2)?.intersect(&q3)?;
    check(
        out,
        "five-variable fixture equals its component intersection",
        file.ideal == intersection,
    );
    let expected_pd = [3usize, 2, 3, 2];
    let expected_depth = [1u64, 2, 1, 2];
    for n in 1..=4u32 {
        let power = symbolic::symbolic_power(&file.ideal, n, caps)?;
        for field in [FieldSpec::Rationals, FieldSpec::Gf(32003)] {
            let table = betti_table(&power, field, caps)?;
            check(
                out,
                format!(
                    "five-variable pd(I^({n})) = {} over {field}",
                    expected_pd[n as usize - 1]
                ),
                table.pd() == expected_pd[n as usize - 1],
            );
            check(
                out,
                format!(
                    "five-variable depth(R/I^({n})) = {} over {field}",
                    expected_depth[n as usize - 1]
                ),
                table.depth_quotient() == expected_depth[n as usize - 1],
            );
        }
    }
    Ok(())
}

fn corona_k3_2(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let g = parse_graph(FIXTURE_CORONA_K3_2).expect("fixture parses");
    for n in 1..=3u32 {
        let expected = 4 * n as u64 + n as u64 / 2;
        let power = symbolic_power_cover(&g, n)?;
        let table = betti_table(&power, FieldSpec::Rationals, caps)?;
        check(
            out,
            format!("corona-K3-2 d(J^({n})) = {expected}"),
            power.max_gen_degree() == expected,
        );
        check(
            out,
            format!("corona-K3-2 reg(J^({n})) = {expected}"),
            table.reg() == expected,
        );
        check(
            out,
            format!("corona-K3-2 J^({n}) componentwise linear"),
            is_componentwise_linear(&power, FieldSpec::Rationals, caps)?,
        );
    }
    Ok(())
}

fn corona_generator_degrees(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    for (m, s) in [(3usize, 2u32), (3, 3), (4, 2)] {
        let g = corona(&Graph::complete(m), s).unwrap();
        let j = cover_ideal(&g)?;
        let expected_d = (m as u64) + (s as u64) - 1;
        check(
            out,
            format!("cg(K_{m},{s}) d(J) = {expected_d}"),
            j.max_gen_degree() == expected_d,
        );
        let expected_delta = rational((m * (s as usize + 1)) as i64, 2);
        let formula = delta_formula(&g, caps)?;
        check(
            out,
            format!("cg(K_{m},{s}) delta by formula = {expected_delta}"),
            formula == expected_delta,
        );
        let components: Vec<MonomialIdeal> = symbolic::minimal_components(&j, caps)?
            .into_iter()
            .map(|(_, q)| q)
            .collect();
        let polyhedral = polyhedra::delta_from_components(&components, caps)?;
        check(
            out,
            format!("cg(K_{m},{s}) delta by vertices = {expected_delta}"),
            polyhedral == expected_delta,
        );
    }
    Ok(())
}

fn star_graph_counterexample(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let g = parse_graph(FIXTURE_G2).expect("fixture parses");
    let j = cover_ideal(&g)?;
    let expected =
        MonomialIdeal::from_exponents(4, &[&[0, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1]])?;
    check(out, "J(G_2) = (bc, abd, acd)", j == expected);
    check(
        out,
        "J(G_2) componentwise linear",
        is_componentwise_linear(&j, FieldSpec::Rationals, caps)?,
    );
    let square = symbolic::symbolic_power(&j, 2, caps)?;
    check(
        out,
        "J(G_2)^(2) not componentwise linear",
        !is_componentwise_linear(&square, FieldSpec::Rationals, caps)?,
    );
    Ok(())
}

fn four_variable_regularity(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let file = parse_ideal(FIXTURE_FOUR_VARIABLE).expect("fixture parses");
    for n in 1..=4u32 {
        let expected = 4 * n as u64 + (n as u64 + 1) / 2;
        let power = symbolic::symbolic_power(&file.ideal, n, caps)?;
        check(
            out,
            format!("four-variable reg(I^({n})) = {expected}"),
            betti_table(&power, FieldSpec::Rationals, caps)?.reg() == expected,
        );
        check(
            out,
            format!("four-variable I^({n}) componentwise linear"),
            is_componentwise_linear(&power, FieldSpec::Rationals, caps)?,
        );
    }
    Ok(())
}

fn eighteen_vertex(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let g = parse_graph(FIXTURE_EIGHTEEN).expect("fixture parses");
    check(
        out,
        "eighteen-vertex graph has 18 vertices and 26 edges",
        g.n_vertices() == 18 && g.n_edges() == 26,
    );
    let delta = delta_formula(&g, caps)?;
    check(
        out,
        "eighteen-vertex delta = 19/2",
        delta == rational(19, 2),
    );
    let j = cover_ideal(&g)?;
    check(out, "eighteen-vertex d(J) = 9", j.max_gen_degree() == 9);
    let j2 = graphs::symbolic_power_cover_direct(&g, 2)?;
    check(
        out,
        "eighteen-vertex d(J^(2)) = 19",
        j2.max_gen_degree() == 19,
    );
    let j3 = graphs::symbolic_power_cover_direct(&g, 3)?;
    check(
        out,
        "eighteen-vertex d(J^(3)) = 27",
        j3.max_gen_degree() == 27,
    );
    let profile = compute_e(&g, caps)?;
    check(out, "eighteen-vertex e = 8", profile.e == 8);
    let mut prediction_ok = true;
    for s in 1..=4u64 {
        prediction_ok &= d_symbolic_formula(&profile, 2 * s + 1)? == 19 * s + 8;
    }
    check(
        out,
        "eighteen-vertex d(J^(2n+1)) = 19n+8 for n = 1..4",
        prediction_ok,
    );
    Ok(())
}

fn corona_k3_1_linear(caps: &Caps, out: &mut Vec<Check>) -> sympow_core::Result<()> {
    let g = parse_graph(FIXTURE_CORONA_K3_1).expect("fixture parses");
    for n in 1..=3u32 {
        let power = symbolic_power_cover(&g, n)?;
        let expected = 3 * n as u64;
        let equigenerated =
            power.min_gen_degree() == expected && power.max_gen_degree() == expected;
        check(
            out,
            format!("corona-K3-1 J^({n}) generated in degree {expected}"),
            equigenerated,
        );
        check(
            out,
            format!("corona-K3-1 J^({n}) has a {expected}-linear resolution"),
            equigenerated && has_linear_resolution(&power, FieldSpec::Rationals, caps)?,
        );
    }
    // delta(J) equals the base vertex count, as the constant vertex sums force
    let delta = delta_formula(&g, caps)?;
    check(out, "corona-K3-1 delta = 3", delta == rational(3, 1));
    Ok(())
}

//! Text formats.
//!
//! The native format is the only one read back:
//!
//! ```text
//! # comment
//! link 3 6
//! X 1 5 2 4
//! X 3 1 4 6
//! X 5 3 6 2
//! ```
//!
//! A tangle uses the header `tangle` and ends with a line
//! `ends NW=<e> NE=<e> SE=<e> SW=<e>`. The edge count includes crossing-free
//! loops, which have no label of their own.
//!
//! PD, Gauss and DT codes are export only. Components are oriented by
//! walking from the lowest-numbered unvisited half-edge; edges are numbered
//! along that walk.

use crate::diagram::topology::Topology;
use crate::diagram::{Crossing, EdgeId, LinkDiagram, Port, Tangle};
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagram {
    Link(LinkDiagram),
    Tangle(Tangle),
}

pub fn parse(text: &str) -> Result<Diagram> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected a header line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (kind, c, e) = match fields[..] {
        [kind @ ("link" | "tangle"), c, e] => (kind, number(hline, c)?, number(hline, e)?),
        _ => {
            return Err(Error::parse(
                hline,
                format!("expected `link <crossings> <edges>` or `tangle <crossings> <edges>`, got `{header}`"),
            ))
        }
    };
    let mut crossings = Vec::with_capacity(c as usize);
    for _ in 0..c {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, format!("header announces {c} crossings, fewer given")))?;
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[..] {
            ["X", a, b, cc, d] => crossings.push(Crossing::new([
                label(ln, a)?,
                label(ln, b)?,
                label(ln, cc)?,
                label(ln, d)?,
            ])),
            _ => return Err(Error::parse(ln, format!("expected `X e0 e1 e2 e3`, got `{line}`"))),
        }
    }
    let ends = if kind == "tangle" {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, "tangle is missing its `ends` line"))?;
        Some(parse_ends(ln, line)?)
    } else {
        None
    };
    if let Some((ln, line)) = lines.next() {
        return Err(Error::parse(ln, format!("unexpected trailing line `{line}`")));
    }
    let distinct: HashSet<EdgeId> = crossings
        .iter()
        .flat_map(|x| x.slots)
        .chain(ends.into_iter().flatten())
        .collect();
    let free_loops = (e as usize).checked_sub(distinct.len()).ok_or_else(|| {
        Error::parse(
            hline,
            format!("header announces {e} edges but {} labels are used", distinct.len()),
        )
    })?;
    Ok(match ends {
        Some(ends) => Diagram::Tangle(Tangle::new(crossings, ends, free_loops)),
        None => Diagram::Link(LinkDiagram::new(crossings, free_loops)),
    })
}

pub fn parse_link(text: &str) -> Result<LinkDiagram> {
    match parse(text)? {
        Diagram::Link(d) => Ok(d),
        Diagram::Tangle(_) => Err(Error::domain("expected a link diagram, found a tangle")),
    }
}

pub fn read_link(path: &std::path::Path) -> Result<LinkDiagram> {
    parse_link(&std::fs::read_to_string(path)?)
}

fn number(line: usize, s: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("`{s}` is not a nonnegative integer")))
}

fn label(line: usize, s: &str) -> Result<EdgeId> {
    match number(line, s)? {
        0 => Err(Error::parse(line, "edge labels start at 1")),
        e => Ok(e),
    }
}

fn parse_ends(ln: usize, line: &str) -> Result<[EdgeId; 4]> {
    let mut f = line.split_whitespace();
    if f.next() != Some("ends") {
        return Err(Error::parse(ln, format!("expected `ends NW=.. NE=.. SE=.. SW=..`, got `{line}`")));
    }
    let mut ends = [0; 4];
    for p in Port::ALL {
        let item = f
            .next()
            .ok_or_else(|| Error::parse(ln, format!("missing {}", p.name())))?;
        let v = item
            .strip_prefix(p.name())
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| Error::parse(ln, format!("expected {}=<edge>, got `{item}`", p.name())))?;
        ends[p as usize] = label(ln, v)?;
    }
    if let Some(extra) = f.next() {
        return Err(Error::parse(ln, format!("unexpected `{extra}` after SW")));
    }
    Ok(ends)
}

fn comments(out: &mut String, header: &[String]) {
    for h in header {
        for l in h.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
}

pub fn write_link(d: &LinkDiagram, header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    let _ = writeln!(out, "link {} {}", d.crossing_count(), d.edge_count());
    for c in d.crossings() {
        let [a, b, x, y] = c.slots;
        let _ = writeln!(out, "X {a} {b} {x} {y}");
    }
    out
}

pub fn write_tangle(t: &Tangle, header: &[String]) -> String {
    let mut out = String::new();
    comments(&mut out, header);
    let _ = writeln!(out, "tangle {} {}", t.crossing_count(), t.edge_count());
    for c in t.crossings() {
        let [a, b, x, y] = c.slots;
        let _ = writeln!(out, "X {a} {b} {x} {y}");
    }
    let [nw, ne, se, sw] = t.ends();
    let _ = writeln!(out, "ends NW={nw} NE={ne} SE={se} SW={sw}");
    out
}

/// Oriented walks: for each component, the half-edges at which it enters
/// successive crossings.
fn walks(topo: &Topology) -> Vec<Vec<usize>> {
    let mut seen = vec![false; topo.darts()];
    let mut out = Vec::new();
    for start in 0..topo.darts() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !seen[d] {
            let exit = topo.opposite(d).expect("closed diagram");
            seen[d] = true;
            seen[exit] = true;
            walk.push(d);
            d = topo.partner[exit];
        }
        out.push(walk);
    }
    out
}

/// `PD[X[i,j,k,l],...]`, each crossing read counterclockwise from the
/// incoming under edge. Crossing-free loops are omitted.
pub fn to_pd(d: &LinkDiagram) -> Result<String> {
    let topo = d.topology()?;
    let mut edge = vec![0usize; topo.darts()];
    let mut incoming = vec![false; topo.darts()];
    let mut next = 0;
    for walk in walks(&topo) {
        for &x in &walk {
            incoming[x] = true;
            let exit = topo.opposite(x).expect("closed diagram");
            next += 1;
            edge[exit] = next;
            edge[topo.partner[exit]] = next;
        }
    }
    let items: Vec<String> = (0..topo.n)
        .map(|c| {
            let l = |s: usize| edge[4 * c + s];
            if incoming[4 * c] {
                format!("X[{},{},{},{}]", l(0), l(1), l(2), l(3))
            } else {
                format!("X[{},{},{},{}]", l(2), l(3), l(0), l(1))
            }
        })
        .collect();
    Ok(format!("PD[{}]", items.join(",")))
}

/// One line per component listing crossings in walk order, positive when
/// passing over and negative when passing under. Crossings are numbered
/// from 1 in file order.
pub fn to_gauss(d: &LinkDiagram) -> Result<String> {
    let topo = d.topology()?;
    let mut out = String::new();
    for walk in walks(&topo) {
        let items: Vec<String> = walk
            .iter()
            .map(|&x| {
                let c = x / 4 + 1;
                if x % 2 == 1 {
                    format!("{c}")
                } else {
                    format!("-{c}")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", items.join(" "));
    }
    for _ in 0..topo.free_loops {
        out.push('\n');
    }
    Ok(out)
}

/// DT code of a knot diagram. Passages are numbered 1..2c along the walk;
/// for each odd passage the code lists its even partner, negated when the
/// even passage goes over.
pub fn to_dt(d: &LinkDiagram) -> Result<String> {
    let topo = d.topology()?;
    let walks = walks(&topo);
    if walks.len() != 1 || topo.free_loops != 0 {
        return Err(Error::domain("DT code needs a knot diagram with at least one crossing"));
    }
    let mut label = [Vec::new(), Vec::new()];
    label[0].resize(topo.n, 0i64);
    label[1].resize(topo.n, 0i64);
    let mut even = vec![0i64; topo.n];
    for (i, &x) in walks[0].iter().enumerate() {
        let p = i as i64 + 1;
        let c = x / 4;
        if p % 2 == 1 {
            label[0][c] = p;
        } else {
            even[c] = if x % 2 == 1 { -p } else { p };
            label[1][c] = p;
        }
    }
    if label[0].iter().chain(&label[1]).any(|&l| l == 0) {
        return Err(Error::domain("diagram has a crossing met twice at equal parity"));
    }
    let mut pairs: Vec<(i64, i64)> = (0..topo.n).map(|c| (label[0][c], even[c])).collect();
    pairs.sort_unstable();
    let items: Vec<String> = pairs.iter().map(|&(_, e)| e.to_string()).collect();
    Ok(format!("DT[{}]", items.join(",")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_link, BraidWord};

    fn trefoil() -> LinkDiagram {
        braid_link(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn native_round_trip() {
        let t = trefoil();
        let text = write_link(&t, &["trefoil".into()]);
        assert!(text.starts_with("# trefoil\nlink 3 6\n"));
        assert_eq!(parse_link(&text).unwrap(), t);
    }

    #[test]
    fn free_loops_come_from_the_edge_count() {
        let d = parse_link("link 0 2\n").unwrap();
        assert_eq!(d.free_loops(), 2);
        assert!(parse_link("link 1 1\nX 1 1 2 2\n").is_err());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse("# c\nlink 1 2\nX 1 2 x 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse("tangle 0 2\n").is_err());
        assert!(parse("knot 3 6\n").is_err());
    }

    #[test]
    fn tangle_round_trip() {
        let t = Tangle::zero();
        let text = write_tangle(&t, &[]);
        assert_eq!(text, "tangle 0 2\nends NW=1 NE=1 SE=2 SW=2\n");
        assert_eq!(parse(&text).unwrap(), Diagram::Tangle(t));
    }

    #[test]
    fn trefoil_exports() {
        let t = trefoil();
        let pd = to_pd(&t).unwrap();
        assert!(pd.starts_with("PD[X["));
        let gauss = to_gauss(&t).unwrap();
        let signs: Vec<i32> = gauss.split_whitespace().map(|s| s.parse().unwrap()).collect();
        assert_eq!(signs.len(), 6);
        // alternating: signs alternate along the walk
        assert!(signs.windows(2).all(|w| (w[0] > 0) != (w[1] > 0)));
        let dt = to_dt(&t).unwrap();
        let v: Vec<i64> = dt
            .trim_start_matches("DT[")
            .trim_end_matches(']')
            .split(',')
            .map(|s| s.parse().unwrap())
            .collect();
        let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
        abs.sort_unstable();
        assert_eq!(abs, vec![2, 4, 6]);
        assert!(v.iter().all(|&x| x.signum() == v[0].signum()));
    }
}

use anyhow::{anyhow, bail, Context, Result};
use hgauss_core::RootOfUnity;

/// Accepts `1`, `-1`, `i`, `-i`, `zetaM`, `zetaM^e`, `zM^e` and `M:e`.
pub fn root_of_unity(s: &str) -> Result<RootOfUnity> {
    let t = s.trim();
    match t {
        "1" => return Ok(RootOfUnity::ONE),
        "-1" => return Ok(RootOfUnity::new(2, 1)),
        "i" => return Ok(RootOfUnity::new(4, 1)),
        "-i" => return Ok(RootOfUnity::new(4, 3)),
        _ => {}
    }
    if let Some((m, e)) = t.split_once(':') {
        return build(m, e, s);
    }
    let body = t
        .strip_prefix("zeta")
        .or_else(|| t.strip_prefix('z'))
        .ok_or_else(|| anyhow!("cannot read root of unity {s:?}"))?;
    match body.split_once('^') {
        Some((m, e)) => build(m, e.trim_start_matches('(').trim_end_matches(')'), s),
        None => build(body, "1", s),
    }
}

fn build(m: &str, e: &str, s: &str) -> Result<RootOfUnity> {
    let m: u64 = m.trim().parse().with_context(|| format!("bad order in {s:?}"))?;
    let e: i64 = e.trim().parse().with_context(|| format!("bad exponent in {s:?}"))?;
    if m == 0 {
        bail!("root of unity of order 0 in {s:?}");
    }
    Ok(RootOfUnity::new(m, e))
}

/// `(1,0)`, `1,0` or `3`.
pub fn element(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    t.split(',')
        .map(|c| c.trim().parse::<i64>().with_context(|| format!("bad group element {s:?}")))
        .collect()
}

/// `A..B` or `A..=B`, both ends included.
pub fn n_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (i64, i64) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {s:?}");
    }
    Ok((a, b))
}

/// `i,j,ROOT` for a bilinear form value on a pair of generators.
pub fn b_entry(s: &str) -> Result<(usize, usize, RootOfUnity)> {
    let mut parts = s.splitn(3, ',');
    let (i, j, z) = match (parts.next(), parts.next(), parts.next()) {
        (Some(i), Some(j), Some(z)) => (i, j, z),
        _ => bail!("expected i,j,ROOT, got {s:?}"),
    };
    Ok((i.trim().parse()?, j.trim().parse()?, root_of_unity(z)?))
}

/// File stem derived from a category name.
pub fn file_stem(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        let c = if ch.is_ascii_alphanumeric() || ch == '-' || ch == '.' { ch } else { '_' };
        if !(c == '_' && out.ends_with('_')) {
            out.push(c);
        }
    }
    let out = out.trim_matches('_').to_string();
    if out.is_empty() {
        "category".into()
    } else {
        out
    }
}

//! Textual group specifications: `z13`, `gf9`, `z2xz7`, `z2xgf9`.

use adesign_core::groupalg::{make_group, Group, GroupSpec};

use crate::CliError;

pub fn parse_group(text: &str) -> Result<Group, CliError> {
    let spec = parse_spec(text)?;
    make_group(&spec).map_err(|e| CliError::new(format!("group {text}: {e}")))
}

fn parse_spec(text: &str) -> Result<GroupSpec, CliError> {
    let t = text.trim().to_ascii_lowercase();
    if let Some(inner) = t.strip_prefix("z2x") {
        return Ok(GroupSpec::Product2(Box::new(parse_spec(inner)?)));
    }
    if let Some(n) = t.strip_prefix("gf") {
        let q: u64 = n
            .parse()
            .map_err(|_| CliError::new(format!("cannot parse field order in {text:?}")))?;
        let (p, m) = split_prime_power(q)
            .ok_or_else(|| CliError::new(format!("{q} is not a prime power")))?;
        return Ok(GroupSpec::FieldAdditive { p, m, modulus: None });
    }
    if let Some(n) = t.strip_prefix('z') {
        let n: u64 = n
            .parse()
            .map_err(|_| CliError::new(format!("cannot parse modulus in {text:?}")))?;
        return Ok(GroupSpec::CyclicZ(n));
    }
    Err(CliError::new(format!(
        "unrecognized group {text:?} (expected z<n>, gf<q>, or z2x<group>)"
    )))
}

fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = 0;
            let mut t = q;
            while t % p == 0 {
                t /= p;
                m += 1;
            }
            return (t == 1).then_some((p, m));
        }
        p += 1;
    }
    Some((q, 1))
}

pub fn parse_elements(text: &str) -> Result<Vec<u64>, CliError> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(
            part.parse::<u64>()
                .map_err(|_| CliError::new(format!("cannot parse element {part:?}")))?,
        );
    }
    if out.is_empty() {
        return Err(CliError::new("empty element list".to_string()));
    }
    Ok(out)
}

// Storing polar profiles on disk and reading them back. The CLI uses the same
// file under $DETLINKS_CACHE.

use detlinks::cache::{self, CacheFile, Loaded};
use detlinks::polar::polar_profile;
use detlinks::{Error, Result};

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join(format!("detlinks-example-{}", std::process::id()));
    let path = dir.join(cache::CACHE_FILE_NAME);
    let profiles = [polar_profile(3, 4, 2)?, polar_profile(4, 5, 2)?];
    let file = CacheFile::from_profiles(profiles.iter().map(|p| &**p));
    cache::store(&path, &file)?;

    let Loaded::Ok(back) = cache::load(&path) else {
        return Err(Error::Consistency("cache did not load".into()));
    };
    assert_eq!(back, file);
    println!("{}: {:?}", path.display(), back.entries["3,4,2"].values);
    cache::clear(&path)?;
    std::fs::remove_dir(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

from racah_natural.natural import verify_centrality


def run(config):
    return verify_centrality(n_jobs=config.n_jobs, progress=config.progress)

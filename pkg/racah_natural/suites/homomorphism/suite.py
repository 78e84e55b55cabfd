from racah_natural.natural import verify_homomorphism


def run(config):
    return verify_homomorphism()

from racah_natural.natural import verify_casimir_images


def run(config):
    return verify_casimir_images()

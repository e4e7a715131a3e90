"""Default configuration values for exactmix."""

HARD_MASK_CAP = 24

DEFAULT_CONFIG = {
    "mask_cap": 20,
    "eps": 0.0,
    "tol": 1e-10,
    "max_iters": 100000,
    "gibbs_iterations": 100000,
    "burn_in_fraction": 0.1,
    "gibbs_batches": 50,
    "seed": 12345,
    "enumeration_budget": 100000000,
    "cause_chunk": 256,
    "max_file_size_mb": 10,
    "output_format": "json",
    "show_progress_animation": True,
    "log_level": "INFO"
}

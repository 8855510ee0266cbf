default_num_processes = 1  # structure checks are cheap; raise via -np for big AME scans

default_tolerance = 1e-10  # Frobenius deviation from I/d^k accepted as maximally mixed
algebraic_tolerance = 1e-12  # normalization, hermiticity and trace identities
unitarity_tolerance = 1e-10  # ||U^dagger U - I||_F
psd_tolerance = 1e-10  # smallest eigenvalue we still call nonnegative

# reduced states above this dimension only get the hermiticity and trace checks
max_eigendecomposition_dim = 256

max_amplitudes = 2 ** 26  # complex128, so about 1 GiB per state vector
default_ame_subset_budget = 10 ** 4

file_norm_tolerance = 1e-9
file_unitarity_tolerance = 1e-9

state_file_version = 1
pipeline_file_version = 1
report_file_version = 1

int betagerm_placeholder_test_beta_dynamics=0;

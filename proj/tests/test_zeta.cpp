int betagerm_placeholder_test_zeta=0;

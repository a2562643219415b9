int betagerm_placeholder_test_puiseux=0;

int betagerm_placeholder_test_germ=0;

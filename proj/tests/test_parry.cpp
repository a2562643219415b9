int betagerm_placeholder_test_parry=0;

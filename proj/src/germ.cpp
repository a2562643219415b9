int betagerm_placeholder_germ=0;

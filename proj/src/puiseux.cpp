int betagerm_placeholder_puiseux=0;

int betagerm_placeholder_parry=0;

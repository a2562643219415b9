int betagerm_placeholder_zeta=0;

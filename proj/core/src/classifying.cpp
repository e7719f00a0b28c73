namespace kanforge {}

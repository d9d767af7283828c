# lipset CI gate scripts
